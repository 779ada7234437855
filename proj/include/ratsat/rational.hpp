// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over GMP integers, plus size measures.
 *
 * A Rational is always kept in lowest terms with a strictly positive
 * denominator; zero is 0/1. The sign lives in the numerator. Values are
 * immutable once built, every operation returns a fresh canonical value.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "ratsat/error.hpp"

namespace ratsat {

using BigInt = mpz_class;

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {} // NOLINT: implicit by intent
  Rational(const BigInt &value) : num_(value), den_(1) {} // NOLINT

  /// Reduces num/den to canonical form. Throws on a zero denominator.
  static Rational normalize(BigInt num, BigInt den) {
    if (den == 0)
      throw Error(ErrorKind::InvalidDenominator, "denominator is zero");
    Rational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.canonicalize();
    return r;
  }

  const BigInt &numerator() const { return num_; }
  const BigInt &denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  friend Rational operator+(const Rational &a, const Rational &b) {
    if (a.den_ == b.den_)
      return normalize(a.num_ + b.num_, a.den_);
    return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    if (a.den_ == b.den_)
      return normalize(a.num_ - b.num_, a.den_);
    return normalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return normalize(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0)
      throw Error(ErrorKind::InvalidDenominator, "division by zero");
    return normalize(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    // Denominators are positive, so cross-multiplication preserves order.
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0)
      return std::strong_ordering::less;
    if (c > 0)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Largest integer not exceeding the value.
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
  }
  /// Smallest integer not below the value.
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
  }

  std::string to_string() const {
    if (den_ == 1)
      return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
  }

  /// Parses "a/b", "-a/b" or "a". The result is canonical, so "4/6" reads
  /// back as 2/3.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
      throw Error(ErrorKind::Parse,
                  "denominator must be unsigned in '" + std::string(text) + "'");
    return normalize(std::move(num), parse_integer(den_text));
  }

private:
  static BigInt parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-')
      digits.remove_prefix(1);
    if (digits.empty())
      throw Error(ErrorKind::Parse, "expected an integer, got '" +
                                        std::string(text) + "'");
    for (char c : digits)
      if (c < '0' || c > '9')
        throw Error(ErrorKind::Parse, "expected an integer, got '" +
                                          std::string(text) + "'");
    return BigInt(std::string(text), 10);
  }

  void canonicalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  BigInt num_;
  BigInt den_;
};

inline std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.to_string();
}

inline BigInt lcm(const BigInt &a, const BigInt &b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Least common multiple of the canonical denominators.
inline BigInt lcm_denominators(std::span<const Rational> xs) {
  if (xs.empty())
    throw Error(ErrorKind::EmptyInput, "lcm of an empty list");
  BigInt alpha = 1;
  for (const auto &x : xs)
    alpha = lcm(alpha, x.denominator());
  return alpha;
}

// Size measures. An integer k costs |k| unary digits (0 costs one digit) and
// bit_length(|k|) binary digits (0 costs one bit). A rational costs the sum of
// its numerator and denominator.

inline BigInt unary_size(const BigInt &k) {
  BigInt a = abs(k);
  return a == 0 ? BigInt(1) : a;
}

inline BigInt unary_size(const Rational &x) {
  return unary_size(x.numerator()) + unary_size(x.denominator());
}

inline std::uint64_t binary_size(const BigInt &k) {
  return mpz_sizeinbase(k.get_mpz_t(), 2);
}

inline std::uint64_t binary_size(const Rational &x) {
  return binary_size(x.numerator()) + binary_size(x.denominator());
}

} // namespace ratsat
