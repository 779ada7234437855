// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file reduction.hpp
 * @brief From a 3-CNF<=4 formula to a rational unbounded subset-sum instance
 *        whose numbers stay polynomial in unary.
 *
 * With primes p_1..p_{n+m} taken as pi_{n+6}.., the item of literal x_i
 * weighs
 *
 *     1 + 1/p_i - 1/p_{i (+)n 1} + sum over occurrences of x_i in C_j of
 *         (1/p_{n+j} - 1/p_{n + (j (+)m 1)})
 *
 * and likewise for ~x_i. The target is n and the total weight is 2n. A
 * multiset of items reaches n exactly when it picks one literal per variable
 * and the picked literals hit every clause the same number of times.
 *
 * Occurrences are counted with multiplicity: a literal written twice in a
 * clause contributes that clause term twice.
 */

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratsat/cnf.hpp"
#include "ratsat/error.hpp"
#include "ratsat/instance.hpp"
#include "ratsat/primes.hpp"
#include "ratsat/rational.hpp"

namespace ratsat {

/// a (+)n b on the cyclic index set {1..n}.
inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b,
                             std::uint64_t n) {
  if (n == 0 || a < 1 || a > n || b < 1 || b > n)
    throw Error(ErrorKind::OutOfRange, "mod_add arguments must lie in 1..n");
  return (a + b - 1) % n + 1;
}

/// a (-)n b on the cyclic index set {1..n}.
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b,
                             std::uint64_t n) {
  if (n == 0 || a < 1 || a > n || b < 1 || b > n)
    throw Error(ErrorKind::OutOfRange, "mod_sub arguments must lie in 1..n");
  return (n + a - b - 1) % n + 1;
}

struct ReductionCertificate {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  /// p_1..p_{n+m}, stored 0-based.
  std::vector<std::uint64_t> primes;
  /// Item k is the literal item_map[k]; items are x1, ~x1, x2, ~x2, ...
  std::vector<Literal> item_map;
  /// For item k, the 1-based clause index of each occurrence (repeats kept).
  std::vector<std::vector<std::uint32_t>> occurrences;

  std::uint64_t p(std::size_t i) const { return primes.at(i - 1); }

  static std::size_t item_of(const Literal &lit) {
    return 2 * (lit.variable - 1) + (lit.positive ? 0 : 1);
  }
};

struct ReducedInstance {
  std::vector<Rational> weights;
  Rational target;
  ReductionCertificate certificate;
};

/// Item weights for a given certificate (the formula is only read through
/// the occurrence lists).
inline std::vector<Rational> reduction_weights(const ReductionCertificate &c) {
  auto inv = [](std::uint64_t p) {
    return Rational::normalize(1, static_cast<unsigned long>(p));
  };
  std::vector<Rational> weights;
  weights.reserve(c.item_map.size());
  for (std::size_t k = 0; k < c.item_map.size(); ++k) {
    const std::uint64_t i = c.item_map[k].variable;
    Rational w = Rational(1) + inv(c.p(i)) - inv(c.p(mod_add(i, 1, c.n)));
    for (auto j : c.occurrences[k])
      w += inv(c.p(c.n + j)) - inv(c.p(c.n + mod_add(j, 1, c.m)));
    weights.push_back(std::move(w));
  }
  return weights;
}

inline ReducedInstance build_instance(const Formula &f) {
  f.require_le4();
  const std::uint32_t n = f.num_vars();
  const auto m = static_cast<std::uint32_t>(f.num_clauses());
  if (n == 0 || m == 0)
    throw Error(ErrorKind::EmptyInput, "reduction needs n >= 1 and m >= 1");

  ReductionCertificate cert;
  cert.n = n;
  cert.m = m;
  // p_i = pi_{i+n+5}: entries n+5 .. 2n+m+4 of the 0-based prime list.
  const auto all = first_n_primes(2 * std::size_t{n} + m + 5);
  cert.primes.assign(all.primes.begin() + n + 5, all.primes.end());

  cert.item_map.reserve(2 * n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    cert.item_map.push_back({i, true});
    cert.item_map.push_back({i, false});
  }
  cert.occurrences.assign(2 * n, {});
  for (std::uint32_t j = 1; j <= m; ++j)
    for (const auto &lit : f.clause(j - 1))
      cert.occurrences[ReductionCertificate::item_of(lit)].push_back(j);

  ReducedInstance r;
  r.weights = reduction_weights(cert);
  r.target = Rational(static_cast<long>(n));
  r.certificate = std::move(cert);
  return r;
}

inline Instance as_subset_sum_instance(const ReducedInstance &ri) {
  return Instance::subset_sum(ProblemKind::UnboundedSubsetSum, ri.weights,
                              ri.target);
}

inline Instance as_partition_instance(const ReducedInstance &ri) {
  return Instance::partition(ri.weights);
}

/// t_1..t_n (per-variable item counts) followed by t_{n+1}..t_{n+m}
/// (per-clause chosen occurrence counts); T is the total number of items.
struct TVector {
  std::vector<long> t;
  long total = 0;
};

inline TVector derive_t(const ReductionCertificate &c, const Witness &q) {
  if (q.size() != c.item_map.size())
    throw Error(ErrorKind::Shape, "quantity vector does not match item count");
  TVector tv;
  tv.t.assign(c.n + c.m, 0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const auto qk = static_cast<long>(q[k]);
    tv.t[c.item_map[k].variable - 1] += qk;
    tv.total += qk;
    for (auto j : c.occurrences[k])
      tv.t[c.n + j - 1] += qk;
  }
  return tv;
}

/// Total weight of a selection expressed through its t-vector:
///   sum t_i + sum (t_i - t_{i(-)1})/p_i + sum (t_{n+j} - t_{n+j(-)1})/p_{n+j}
inline Rational star_weight(const TVector &tv, const ReductionCertificate &c) {
  if (tv.t.size() != std::size_t{c.n} + c.m)
    throw Error(ErrorKind::Shape, "t-vector must have n+m entries");
  auto t = [&](std::size_t idx) { return tv.t[idx - 1]; };
  Rational sum;
  for (std::uint32_t i = 1; i <= c.n; ++i)
    sum += Rational(t(i)) +
           Rational::normalize(t(i) - t(mod_sub(i, 1, c.n)),
                               static_cast<unsigned long>(c.p(i)));
  for (std::uint32_t j = 1; j <= c.m; ++j)
    sum += Rational::normalize(t(c.n + j) - t(c.n + mod_sub(j, 1, c.m)),
                               static_cast<unsigned long>(c.p(c.n + j)));
  return sum;
}

inline Witness valuation_to_witness(const ReductionCertificate &c,
                                    const Valuation &v) {
  if (v.size() != c.n)
    throw Error(ErrorKind::Shape, "valuation length differs from n");
  Witness q(2 * c.n, 0);
  for (std::uint32_t i = 0; i < c.n; ++i)
    q[2 * i + (v[i] ? 0 : 1)] = 1;
  return q;
}

/// Reads a valuation off a witness when every variable has exactly one of
/// its two items picked once.
inline std::optional<Valuation> witness_to_valuation(const ReductionCertificate &c,
                                                     const Witness &q) {
  if (q.size() != 2 * std::size_t{c.n})
    throw Error(ErrorKind::Shape, "witness length differs from 2n");
  Valuation v(c.n);
  for (std::uint32_t i = 0; i < c.n; ++i) {
    const auto pos = q[2 * i], neg = q[2 * i + 1];
    if (pos + neg != 1 || pos > 1 || neg > 1)
      return std::nullopt;
    v[i] = pos == 1;
  }
  return v;
}

/// Certificate as '#' comment lines for the instance file.
inline std::string certificate_comments(const ReductionCertificate &c) {
  std::ostringstream out;
  out << "# n: " << c.n << '\n' << "# m: " << c.m << '\n' << "# primes:";
  for (auto p : c.primes)
    out << ' ' << p;
  out << '\n';
  for (std::size_t k = 0; k < c.item_map.size(); ++k) {
    out << "# item " << k + 1 << ": " << (c.item_map[k].positive ? "" : "-")
        << "x" << c.item_map[k].variable << " clauses";
    for (auto j : c.occurrences[k])
      out << ' ' << j;
    out << '\n';
  }
  return out.str();
}

} // namespace ratsat
