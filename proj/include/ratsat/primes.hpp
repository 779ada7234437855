// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "ratsat/error.hpp"
#include "ratsat/rational.hpp"

namespace ratsat {

/// The first `count` primes in increasing order.
struct PrimeList {
  std::vector<std::uint64_t> primes;

  std::size_t count() const { return primes.size(); }
  /// 1-based access: at(1) == 2.
  std::uint64_t at(std::size_t i) const { return primes.at(i - 1); }
};

namespace detail {

inline std::vector<std::uint64_t> sieve_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= limit; ++k) {
    if (composite[k])
      continue;
    out.push_back(k);
    for (std::uint64_t j = k * k; j <= limit; j += k)
      composite[j] = true;
  }
  return out;
}

} // namespace detail

/// Sieve of Eratosthenes over [2, ceil(2 n ln n)]. For n >= 6 the limit is
/// guaranteed to contain n primes; smaller n use a fixed table.
inline PrimeList first_n_primes(std::size_t n) {
  if (n == 0)
    throw Error(ErrorKind::EmptyInput, "need at least one prime");
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11};
  if (n < 6)
    return PrimeList{{small, small + n}};

  const double nd = static_cast<double>(n);
  auto limit = static_cast<std::uint64_t>(std::ceil(2.0 * nd * std::log(nd)));
  for (;;) {
    auto found = detail::sieve_up_to(limit);
    if (found.size() >= n) {
      found.resize(n);
      return PrimeList{std::move(found)};
    }
    limit *= 2; // unreachable for the bound above
  }
}

/// i (ln i + ln ln i), an upper bound on the i-th prime for i >= 6.
inline double prime_upper_bound(std::uint64_t i) {
  if (i < 6)
    throw Error(ErrorKind::OutOfRange, "prime bound holds only for i >= 6");
  const double x = static_cast<double>(i);
  return x * (std::log(x) + std::log(std::log(x)));
}

/// Total unary length of the first n primes: their plain sum.
inline BigInt unary_size_of_first_primes(std::size_t n) {
  BigInt total = 0;
  for (auto p : first_n_primes(n).primes)
    total += static_cast<unsigned long>(p);
  return total;
}

inline bool is_prime_trial(std::uint64_t k) {
  if (k < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= k; ++d)
    if (k % d == 0)
      return false;
  return true;
}

/// Two coefficient lists over distinct primes, compared as
/// a0 + sum a_i/p_i versus b0 + sum b_i/p_i.
class LemmaInstance {
public:
  LemmaInstance(std::vector<std::uint64_t> primes, std::vector<long> a,
                std::vector<long> b, bool unchecked = false)
      : primes_(std::move(primes)), a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != primes_.size() + 1 || b_.size() != primes_.size() + 1)
      throw Error(ErrorKind::Shape,
                  "coefficient lists must have one entry per prime plus a0");
    std::set<std::uint64_t> seen;
    for (auto p : primes_) {
      if (!is_prime_trial(p))
        throw Error(ErrorKind::InvalidPrimes,
                    std::to_string(p) + " is not prime");
      if (!seen.insert(p).second)
        throw Error(ErrorKind::InvalidPrimes,
                    "duplicate prime " + std::to_string(p));
    }
    hypothesis_ = true;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      const long diff = a_[i + 1] - b_[i + 1];
      if (static_cast<std::uint64_t>(diff < 0 ? -diff : diff) >= primes_[i])
        hypothesis_ = false;
    }
    if (!hypothesis_ && !unchecked)
      throw Error(ErrorKind::Hypothesis,
                  "|a_i - b_i| < p_i is violated; pass unchecked to allow");
  }

  std::span<const std::uint64_t> primes() const { return primes_; }
  std::span<const long> a() const { return a_; }
  std::span<const long> b() const { return b_; }
  bool satisfies_hypothesis() const { return hypothesis_; }

private:
  std::vector<std::uint64_t> primes_;
  std::vector<long> a_;
  std::vector<long> b_;
  bool hypothesis_ = true;
};

struct LemmaVerdict {
  bool equal_sums;
  bool componentwise_equal;
};

inline LemmaVerdict lemma1_equal_iff_componentwise(const LemmaInstance &inst) {
  auto evaluate = [&](std::span<const long> coeffs) {
    Rational sum(coeffs[0]);
    for (std::size_t i = 0; i < inst.primes().size(); ++i)
      sum += Rational::normalize(coeffs[i + 1],
                                 static_cast<unsigned long>(inst.primes()[i]));
    return sum;
  };
  return {evaluate(inst.a()) == evaluate(inst.b()),
          std::ranges::equal(inst.a(), inst.b())};
}

} // namespace ratsat
