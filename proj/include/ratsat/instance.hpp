// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file instance.hpp
 * @brief The five rational decision problems, their text format, witness
 *        checking, integer scaling and size measures.
 *
 * Instance file grammar (comments start with '#', blank lines ignored):
 *
 *     problem: <partition|subset-sum-01|subset-sum-unbounded|knapsack-01|knapsack-unbounded>
 *     capacity: <rational>        (absent for partition)
 *     threshold: <rational>       (knapsack kinds; optional when only approximating)
 *     <weight>                    (one item per line)
 *     <weight> <profit>           (knapsack kinds)
 */

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ratsat/error.hpp"
#include "ratsat/rational.hpp"

namespace ratsat {

enum class ProblemKind {
  Partition,
  SubsetSum01,
  UnboundedSubsetSum,
  Knapsack01,
  UnboundedKnapsack,
};

inline std::string_view to_string(ProblemKind k) {
  switch (k) {
  case ProblemKind::Partition: return "partition";
  case ProblemKind::SubsetSum01: return "subset-sum-01";
  case ProblemKind::UnboundedSubsetSum: return "subset-sum-unbounded";
  case ProblemKind::Knapsack01: return "knapsack-01";
  case ProblemKind::UnboundedKnapsack: return "knapsack-unbounded";
  }
  return "?";
}

inline std::optional<ProblemKind> problem_kind_from_string(std::string_view s) {
  for (auto k : {ProblemKind::Partition, ProblemKind::SubsetSum01,
                 ProblemKind::UnboundedSubsetSum, ProblemKind::Knapsack01,
                 ProblemKind::UnboundedKnapsack})
    if (to_string(k) == s)
      return k;
  return std::nullopt;
}

inline bool is_knapsack(ProblemKind k) {
  return k == ProblemKind::Knapsack01 || k == ProblemKind::UnboundedKnapsack;
}
inline bool is_unbounded(ProblemKind k) {
  return k == ProblemKind::UnboundedSubsetSum ||
         k == ProblemKind::UnboundedKnapsack;
}

/// Quantity vector, one entry per item.
using Witness = std::vector<std::uint64_t>;

class Instance {
public:
  ProblemKind kind = ProblemKind::SubsetSum01;
  std::vector<Rational> weights;
  std::vector<Rational> profits;      // knapsack kinds only
  std::optional<Rational> capacity;   // absent for partition
  std::optional<Rational> threshold;  // knapsack kinds only

  static Instance partition(std::vector<Rational> w) {
    Instance i;
    i.kind = ProblemKind::Partition;
    i.weights = std::move(w);
    i.validate();
    return i;
  }
  static Instance subset_sum(ProblemKind kind, std::vector<Rational> w,
                             Rational capacity) {
    Instance i;
    i.kind = kind;
    i.weights = std::move(w);
    i.capacity = std::move(capacity);
    i.validate();
    return i;
  }
  static Instance knapsack(ProblemKind kind, std::vector<Rational> w,
                           std::vector<Rational> v, Rational capacity,
                           std::optional<Rational> threshold) {
    Instance i;
    i.kind = kind;
    i.weights = std::move(w);
    i.profits = std::move(v);
    i.capacity = std::move(capacity);
    i.threshold = std::move(threshold);
    i.validate();
    return i;
  }

  std::size_t size() const { return weights.size(); }

  /// Throws shape error when fields do not match the kind or a number is
  /// negative.
  void validate() const {
    const bool knap = is_knapsack(kind);
    if (knap && profits.size() != weights.size())
      throw Error(ErrorKind::Shape, "knapsack needs one profit per weight");
    if (!knap && !profits.empty())
      throw Error(ErrorKind::Shape, "profits given for a subset-sum kind");
    if (!knap && threshold)
      throw Error(ErrorKind::Shape, "threshold given for a subset-sum kind");
    if (kind == ProblemKind::Partition && capacity)
      throw Error(ErrorKind::Shape, "partition carries no capacity");
    if (kind != ProblemKind::Partition && !capacity)
      throw Error(ErrorKind::Shape, "missing capacity");
    auto nonneg = [](const Rational &x, const char *what) {
      if (x.sign() < 0)
        throw Error(ErrorKind::Shape,
                    std::string("negative ") + what + " " + x.to_string());
    };
    for (const auto &w : weights)
      nonneg(w, "weight");
    for (const auto &v : profits)
      nonneg(v, "profit");
    if (capacity)
      nonneg(*capacity, "capacity");
    if (threshold)
      nonneg(*threshold, "threshold");
  }

  /// Every number in the instance, in file order.
  std::vector<Rational> all_numbers() const {
    std::vector<Rational> xs;
    if (capacity)
      xs.push_back(*capacity);
    if (threshold)
      xs.push_back(*threshold);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      xs.push_back(weights[i]);
      if (!profits.empty())
        xs.push_back(profits[i]);
    }
    return xs;
  }

  friend bool operator==(const Instance &, const Instance &) = default;
};

inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::vector<std::string> lines;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const auto b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos)
      continue;
    const auto e = raw.find_last_not_of(" \t\r");
    lines.push_back(raw.substr(b, e - b + 1));
  }

  std::size_t at = 0;
  auto keyed = [&](std::string_view key) -> std::optional<std::string> {
    if (at >= lines.size())
      return std::nullopt;
    std::string_view line = lines[at];
    if (line.substr(0, key.size()) != key || line.size() <= key.size() ||
        line[key.size()] != ':')
      return std::nullopt;
    ++at;
    std::string value(line.substr(key.size() + 1));
    const auto b = value.find_first_not_of(" \t");
    return b == std::string::npos ? std::string() : value.substr(b);
  };

  const auto kind_text = keyed("problem");
  if (!kind_text)
    throw Error(ErrorKind::Parse, "first line must be 'problem: <kind>'");
  const auto kind = problem_kind_from_string(*kind_text);
  if (!kind)
    throw Error(ErrorKind::Parse, "unknown problem kind '" + *kind_text + "'");

  Instance inst;
  inst.kind = *kind;
  if (*kind != ProblemKind::Partition) {
    auto cap = keyed("capacity");
    if (!cap)
      throw Error(ErrorKind::Parse, "missing 'capacity:' line");
    inst.capacity = Rational::parse(*cap);
  }
  if (is_knapsack(*kind))
    if (auto thr = keyed("threshold"))
      inst.threshold = Rational::parse(*thr);

  const std::size_t fields = is_knapsack(*kind) ? 2 : 1;
  for (; at < lines.size(); ++at) {
    std::istringstream ls(lines[at]);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;)
      toks.push_back(t);
    if (toks.size() != fields)
      throw Error(ErrorKind::Parse, "item line '" + lines[at] + "' needs " +
                                        std::to_string(fields) + " field(s)");
    inst.weights.push_back(Rational::parse(toks[0]));
    if (fields == 2)
      inst.profits.push_back(Rational::parse(toks[1]));
  }
  inst.validate();
  return inst;
}

inline std::string to_text(const Instance &inst) {
  std::ostringstream out;
  out << "problem: " << to_string(inst.kind) << '\n';
  if (inst.capacity)
    out << "capacity: " << *inst.capacity << '\n';
  if (inst.threshold)
    out << "threshold: " << *inst.threshold << '\n';
  for (std::size_t i = 0; i < inst.weights.size(); ++i) {
    out << inst.weights[i];
    if (!inst.profits.empty())
      out << ' ' << inst.profits[i];
    out << '\n';
  }
  return out.str();
}

inline Witness parse_witness(std::string_view text) {
  std::istringstream in{std::string(text)};
  Witness q;
  for (std::string tok; in >> tok;) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::Parse, "witness entry '" + tok +
                                        "' is not a nonnegative integer");
    try {
      q.push_back(std::stoull(tok));
    } catch (const std::exception &) {
      throw Error(ErrorKind::Parse, "witness entry '" + tok + "' too large");
    }
  }
  return q;
}

inline std::string to_text(const Witness &q) {
  std::ostringstream out;
  for (std::size_t i = 0; i < q.size(); ++i)
    out << (i ? " " : "") << q[i];
  return out.str();
}

inline Rational total_weight(const Instance &inst) {
  Rational s;
  for (const auto &w : inst.weights)
    s += w;
  return s;
}

/// Exact check of the defining (in)equalities for the instance's kind.
inline bool verify_witness(const Instance &inst, const Witness &q) {
  if (q.size() != inst.size())
    throw Error(ErrorKind::Shape, "witness has " + std::to_string(q.size()) +
                                      " entries for " +
                                      std::to_string(inst.size()) + " items");
  if (!is_unbounded(inst.kind))
    for (auto x : q)
      if (x > 1)
        throw Error(ErrorKind::InvalidWitness,
                    "entry " + std::to_string(x) + " in a 0-1 witness");
  Rational weight, profit;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0)
      continue;
    const Rational k(BigInt(static_cast<unsigned long>(q[i])));
    weight += k * inst.weights[i];
    if (!inst.profits.empty())
      profit += k * inst.profits[i];
  }
  switch (inst.kind) {
  case ProblemKind::Partition:
    return weight + weight == total_weight(inst);
  case ProblemKind::SubsetSum01:
  case ProblemKind::UnboundedSubsetSum:
    return weight == *inst.capacity;
  case ProblemKind::Knapsack01:
  case ProblemKind::UnboundedKnapsack:
    if (!inst.threshold)
      throw Error(ErrorKind::Shape, "knapsack decision needs a threshold");
    return weight <= *inst.capacity && profit >= *inst.threshold;
  }
  return false;
}

/// Integer form of an instance: every number times alpha.
struct ScaledInstance {
  ProblemKind kind;
  std::vector<BigInt> weights;
  std::vector<BigInt> profits;
  std::optional<BigInt> capacity;
  std::optional<BigInt> threshold;
  BigInt alpha;
};

namespace detail {
inline BigInt scale_exact(const Rational &x, const BigInt &alpha) {
  BigInt r = x.numerator() * alpha;
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), x.denominator().get_mpz_t());
  return r;
}
} // namespace detail

/// Multiplies every number by alpha, the lcm of all denominators.
inline ScaledInstance scale_to_integers(const Instance &inst) {
  const auto all = inst.all_numbers();
  ScaledInstance s{inst.kind, {}, {}, {}, {},
                   all.empty() ? BigInt(1) : lcm_denominators(all)};
  for (const auto &w : inst.weights)
    s.weights.push_back(detail::scale_exact(w, s.alpha));
  for (const auto &v : inst.profits)
    s.profits.push_back(detail::scale_exact(v, s.alpha));
  if (inst.capacity)
    s.capacity = detail::scale_exact(*inst.capacity, s.alpha);
  if (inst.threshold)
    s.threshold = detail::scale_exact(*inst.threshold, s.alpha);
  return s;
}

/// The same integers read back as a rational instance.
inline Instance to_instance(const ScaledInstance &s) {
  Instance i;
  i.kind = s.kind;
  for (const auto &w : s.weights)
    i.weights.emplace_back(w);
  for (const auto &v : s.profits)
    i.profits.emplace_back(v);
  if (s.capacity)
    i.capacity = Rational(*s.capacity);
  if (s.threshold)
    i.threshold = Rational(*s.threshold);
  i.validate();
  return i;
}

struct SizeMeasures {
  std::uint64_t binary = 0;
  BigInt unary = 0;
  std::uint64_t scaled_binary = 0;
  BigInt scaled_unary = 0;
  BigInt alpha = 1;
};

/// Encoding sizes before and after integer scaling. Scaled numbers are
/// integers and are measured without a denominator.
inline SizeMeasures measure_sizes(const Instance &inst) {
  SizeMeasures m;
  for (const auto &x : inst.all_numbers()) {
    m.binary += binary_size(x);
    m.unary += unary_size(x);
  }
  const auto s = scale_to_integers(inst);
  m.alpha = s.alpha;
  auto add = [&](const BigInt &k) {
    m.scaled_binary += binary_size(k);
    m.scaled_unary += unary_size(k);
  };
  if (s.capacity)
    add(*s.capacity);
  if (s.threshold)
    add(*s.threshold);
  for (std::size_t i = 0; i < s.weights.size(); ++i) {
    add(s.weights[i]);
    if (!s.profits.empty())
      add(s.profits[i]);
  }
  return m;
}

} // namespace ratsat
