// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file cnf.hpp
 * @brief 3-CNF formulae, DIMACS I/O and exhaustive decision for the three
 *        satisfaction modes (classical, one-in-three, all-the-same).
 *
 * Counting is per literal occurrence: the clause (x | x | ~x) has two true
 * occurrences when x holds and one when it does not.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ratsat/error.hpp"

namespace ratsat {

struct Literal {
  std::uint32_t variable = 0; // 1-based
  bool positive = true;

  Literal negated() const { return {variable, !positive}; }
  /// DIMACS integer form.
  long as_dimacs() const {
    return positive ? static_cast<long>(variable) : -static_cast<long>(variable);
  }
  static Literal from_dimacs(long v) {
    return v > 0 ? Literal{static_cast<std::uint32_t>(v), true}
                 : Literal{static_cast<std::uint32_t>(-v), false};
  }

  friend bool operator==(const Literal &, const Literal &) = default;
  friend auto operator<=>(const Literal &, const Literal &) = default;
};

using Clause = std::array<Literal, 3>;
using Valuation = std::vector<bool>;

/// Maximum occurrences per variable (both polarities together) in 3-CNF<=4.
inline constexpr std::uint32_t kMaxOccurrences = 4;

class Formula {
public:
  Formula() = default;

  /// Throws parse error if a literal is outside 1..num_vars.
  Formula(std::uint32_t num_vars, std::vector<Clause> clauses)
      : n_(num_vars), clauses_(std::move(clauses)), occurrences_(num_vars, 0) {
    for (const auto &c : clauses_)
      for (const auto &lit : c) {
        if (lit.variable == 0 || lit.variable > n_)
          throw Error(ErrorKind::Parse, "variable " +
                                            std::to_string(lit.variable) +
                                            " outside 1.." + std::to_string(n_));
        ++occurrences_[lit.variable - 1];
      }
  }

  std::uint32_t num_vars() const { return n_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause> &clauses() const { return clauses_; }
  const Clause &clause(std::size_t j) const { return clauses_.at(j); }

  /// Occurrences of variable v (1-based), counting both polarities.
  std::uint32_t occurrences(std::uint32_t v) const {
    return occurrences_.at(v - 1);
  }
  const std::vector<std::uint32_t> &occurrence_table() const {
    return occurrences_;
  }

  bool is_le4() const {
    for (auto k : occurrences_)
      if (k > kMaxOccurrences)
        return false;
    return true;
  }

  void require_le4() const {
    for (std::uint32_t v = 1; v <= n_; ++v)
      if (occurrences_[v - 1] > kMaxOccurrences)
        throw Error(ErrorKind::OccurrenceBound,
                    "variable " + std::to_string(v) + " occurs " +
                        std::to_string(occurrences_[v - 1]) +
                        " times (at most 4 allowed)");
  }

  friend bool operator==(const Formula &, const Formula &) = default;

private:
  std::uint32_t n_ = 0;
  std::vector<Clause> clauses_;
  std::vector<std::uint32_t> occurrences_;
};

/// Reads DIMACS CNF. Every clause must have exactly three literals.
inline Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::uint32_t> declared_vars;
  std::optional<std::size_t> declared_clauses;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%')
      continue;
    if (tok == "p") {
      std::string fmt;
      long nv = -1, nc = -1;
      if (declared_vars || !(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 ||
          nc < 0)
        throw Error(ErrorKind::Parse, "malformed header: '" + line + "'");
      declared_vars = static_cast<std::uint32_t>(nv);
      declared_clauses = static_cast<std::size_t>(nc);
      continue;
    }
    if (!declared_vars)
      throw Error(ErrorKind::Parse, "clause data before 'p cnf' header");
    do {
      long v = 0;
      try {
        std::size_t used = 0;
        v = std::stol(tok, &used);
        if (used != tok.size())
          throw std::invalid_argument(tok);
      } catch (const std::exception &) {
        throw Error(ErrorKind::Parse, "bad literal '" + tok + "'");
      }
      if (v == 0) {
        if (pending.size() != 3)
          throw Error(ErrorKind::Arity,
                      "clause " + std::to_string(clauses.size() + 1) + " has " +
                          std::to_string(pending.size()) +
                          " literals, expected 3");
        clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long mag = v < 0 ? -v : v;
      if (mag > static_cast<long>(*declared_vars))
        throw Error(ErrorKind::Parse, "literal " + tok + " exceeds declared " +
                                          std::to_string(*declared_vars) +
                                          " variables");
      pending.push_back(Literal::from_dimacs(v));
    } while (ls >> tok);
  }
  if (!declared_vars)
    throw Error(ErrorKind::Parse, "missing 'p cnf' header");
  if (!pending.empty())
    throw Error(ErrorKind::Parse, "last clause is not terminated by 0");
  if (clauses.empty())
    throw Error(ErrorKind::Parse, "formula has no clauses");
  if (clauses.size() != *declared_clauses)
    throw Error(ErrorKind::Parse,
                "header declares " + std::to_string(*declared_clauses) +
                    " clauses, found " + std::to_string(clauses.size()));
  return Formula(*declared_vars, std::move(clauses));
}

inline std::string to_dimacs(const Formula &f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const auto &c : f.clauses())
    out << c[0].as_dimacs() << ' ' << c[1].as_dimacs() << ' '
        << c[2].as_dimacs() << " 0\n";
  return out.str();
}

inline bool literal_value(const Literal &lit, const Valuation &v) {
  return v[lit.variable - 1] == lit.positive;
}

/// Number of true literal occurrences per clause.
inline std::vector<int> true_literal_counts(const Formula &f,
                                            const Valuation &v) {
  if (v.size() != f.num_vars())
    throw Error(ErrorKind::Shape, "valuation has " + std::to_string(v.size()) +
                                      " entries, formula has " +
                                      std::to_string(f.num_vars()) +
                                      " variables");
  std::vector<int> counts;
  counts.reserve(f.num_clauses());
  for (const auto &c : f.clauses()) {
    int k = 0;
    for (const auto &lit : c)
      k += literal_value(lit, v) ? 1 : 0;
    counts.push_back(k);
  }
  return counts;
}

enum class SatMode { Sat, OneInThree, AllSame };

inline bool accepts(SatMode mode, const std::vector<int> &counts) {
  switch (mode) {
  case SatMode::Sat:
    for (int c : counts)
      if (c < 1)
        return false;
    return true;
  case SatMode::OneInThree:
    for (int c : counts)
      if (c != 1)
        return false;
    return true;
  case SatMode::AllSame:
    for (int c : counts)
      if (c != counts.front())
        return false;
    return true;
  }
  return false;
}

inline constexpr std::uint32_t kDefaultBruteForceLimit = 25;

/// Enumerates valuations in binary counting order (variable 1 is the least
/// significant bit) and returns the first one accepted by `mode`.
inline std::optional<Valuation>
brute_force_decide(const Formula &f, SatMode mode,
                   std::uint32_t max_vars = kDefaultBruteForceLimit) {
  const std::uint32_t n = f.num_vars();
  if (n > max_vars || n >= 63)
    throw Error(ErrorKind::ResourceLimit,
                std::to_string(n) + " variables exceed the enumeration limit " +
                    std::to_string(max_vars));

  // Packed clause masks for the inner loop.
  struct Packed {
    std::uint64_t bit[3];
    bool positive[3];
  };
  std::vector<Packed> packed;
  packed.reserve(f.num_clauses());
  for (const auto &c : f.clauses()) {
    Packed p{};
    for (int k = 0; k < 3; ++k) {
      p.bit[k] = std::uint64_t{1} << (c[k].variable - 1);
      p.positive[k] = c[k].positive;
    }
    packed.push_back(p);
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    int first = -1;
    bool ok = true;
    for (const auto &p : packed) {
      int k = 0;
      for (int t = 0; t < 3; ++t)
        k += (((bits & p.bit[t]) != 0) == p.positive[t]) ? 1 : 0;
      switch (mode) {
      case SatMode::Sat: ok = k >= 1; break;
      case SatMode::OneInThree: ok = k == 1; break;
      case SatMode::AllSame:
        if (first < 0)
          first = k;
        ok = k == first;
        break;
      }
      if (!ok)
        break;
    }
    if (ok) {
      Valuation v(n);
      for (std::uint32_t i = 0; i < n; ++i)
        v[i] = (bits >> i) & 1U;
      return v;
    }
  }
  return std::nullopt;
}

} // namespace ratsat
