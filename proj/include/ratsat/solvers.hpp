// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file solvers.hpp
 * @brief Exact decision procedures for the five problem kinds.
 *
 * decide() scales to integers and runs a pseudo-polynomial dynamic program.
 * Its table size depends on the scaled capacity, which can be exponential in
 * the binary size of a rational instance, so it refuses to start when the
 * table would exceed a cell budget.
 *
 * oracle_decide() enumerates quantity vectors with exact rational sums and
 * shares no code with the DP. It exists to cross-check decide().
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "ratsat/error.hpp"
#include "ratsat/instance.hpp"
#include "ratsat/rational.hpp"

namespace ratsat {

struct DecisionStats {
  BigInt alpha = 1;        // weight/capacity scaling factor
  BigInt profit_alpha = 1; // profit/threshold scaling factor (knapsack)
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t nodes = 0; // oracle search nodes
  double elapsed_seconds = 0;
};

struct Decision {
  bool yes = false;
  std::optional<Witness> witness;
  DecisionStats stats;
};

struct SolverLimits {
  std::uint64_t max_table_cells = 100'000'000;
  std::uint64_t max_oracle_nodes = std::uint64_t{1} << 25;
};

namespace detail {

inline std::uint64_t to_u64(const BigInt &x) {
  // Callers only pass values already checked against a budget.
  return std::stoull(x.get_str());
}

inline BigInt lcm_of(const std::vector<Rational> &xs) {
  BigInt a = 1;
  for (const auto &x : xs)
    a = lcm(a, x.denominator());
  return a;
}

/// Row-major bitset rows used by the 0-1 subset-sum table.
class BitRows {
public:
  BitRows(std::size_t rows, std::size_t bits)
      : words_((bits + 63) / 64), data_(rows * words_, 0) {}

  std::uint64_t *row(std::size_t r) { return data_.data() + r * words_; }
  bool test(std::size_t r, std::size_t bit) const {
    return (data_[r * words_ + bit / 64] >> (bit % 64)) & 1U;
  }
  std::size_t words() const { return words_; }

private:
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

/// dst = src | (src << shift), restricted to `bits` bits.
inline void shift_or(const std::uint64_t *src, std::uint64_t *dst,
                     std::size_t words, std::size_t bits, std::uint64_t shift) {
  const std::size_t ws = shift / 64, bs = shift % 64;
  for (std::size_t k = 0; k < words; ++k) {
    std::uint64_t v = 0;
    if (k >= ws) {
      v = src[k - ws] << bs;
      if (bs && k > ws)
        v |= src[k - ws - 1] >> (64 - bs);
    }
    dst[k] = src[k] | v;
  }
  if (bits % 64)
    dst[words - 1] &= (std::uint64_t{1} << (bits % 64)) - 1;
}

/// 0-1 subset sum over integers; witness prefers lower-index items.
inline std::optional<Witness>
subset_sum_01(const std::vector<std::uint64_t> &w, std::uint64_t target) {
  const std::size_t n = w.size(), bits = target + 1;
  BitRows table(n + 1, bits);
  table.row(0)[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] > target) {
      std::copy_n(table.row(i), table.words(), table.row(i + 1));
      continue;
    }
    shift_or(table.row(i), table.row(i + 1), table.words(), bits, w[i]);
  }
  if (!table.test(n, target))
    return std::nullopt;
  Witness q(n, 0);
  std::uint64_t c = target;
  for (std::size_t i = n; i-- > 0;) {
    if (table.test(i, c))
      continue;
    q[i] = 1;
    c -= w[i];
  }
  return q;
}

inline std::optional<Witness>
subset_sum_unbounded(const std::vector<std::uint64_t> &w, std::uint64_t target) {
  constexpr auto none = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> via(target + 1, none);
  std::vector<bool> reach(target + 1, false);
  reach[0] = true;
  for (std::uint64_t c = 1; c <= target; ++c)
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0 && w[i] <= c && reach[c - w[i]]) {
        reach[c] = true;
        via[c] = static_cast<std::uint32_t>(i);
        break;
      }
  if (!reach[target])
    return std::nullopt;
  Witness q(w.size(), 0);
  for (std::uint64_t c = target; c > 0; c -= w[via[c]])
    ++q[via[c]];
  return q;
}

/// Best profit, saturated at `cap`, for weight <= capacity.
inline std::pair<std::int64_t, Witness>
knapsack_01(const std::vector<std::uint64_t> &w,
            const std::vector<std::int64_t> &v, std::uint64_t capacity,
            std::int64_t cap) {
  const std::size_t n = w.size();
  std::vector<std::int64_t> best(capacity + 1, 0);
  std::vector<std::vector<bool>> keep(n, std::vector<bool>(capacity + 1, false));
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] > capacity)
      continue;
    for (std::uint64_t c = capacity + 1; c-- > w[i];) {
      const auto cand = std::min(best[c - w[i]] + v[i], cap);
      if (cand > best[c]) {
        best[c] = cand;
        keep[i][c] = true;
      }
    }
  }
  Witness q(n, 0);
  std::uint64_t c = capacity;
  for (std::size_t i = n; i-- > 0;)
    if (keep[i][c]) {
      q[i] = 1;
      c -= w[i];
    }
  return {best[capacity], q};
}

inline std::pair<std::int64_t, Witness>
knapsack_unbounded(const std::vector<std::uint64_t> &w,
                   const std::vector<std::int64_t> &v, std::uint64_t capacity,
                   std::int64_t cap) {
  constexpr auto inherit = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::int64_t> best(capacity + 1, 0);
  std::vector<std::uint32_t> choice(capacity + 1, inherit);
  for (std::uint64_t c = 1; c <= capacity; ++c) {
    best[c] = best[c - 1];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0 || w[i] > c)
        continue;
      const auto cand = std::min(best[c - w[i]] + v[i], cap);
      if (cand > best[c]) {
        best[c] = cand;
        choice[c] = static_cast<std::uint32_t>(i);
      }
    }
  }
  Witness q(w.size(), 0);
  for (std::uint64_t c = capacity; c > 0;) {
    if (choice[c] == inherit) {
      --c;
      continue;
    }
    ++q[choice[c]];
    c -= w[choice[c]];
  }
  return {best[capacity], q};
}

} // namespace detail

/// Pseudo-polynomial exact decision. Throws resource-limit when the DP table
/// (items x scaled capacity) would exceed `limits.max_table_cells`.
inline Decision decide(const Instance &inst, const SolverLimits &limits = {}) {
  inst.validate();
  const auto start = std::chrono::steady_clock::now();
  Decision d;

  std::vector<Rational> weight_side = inst.weights;
  if (inst.capacity)
    weight_side.push_back(*inst.capacity);
  d.stats.alpha = detail::lcm_of(weight_side);
  const BigInt &alpha = d.stats.alpha;

  std::vector<BigInt> w;
  for (const auto &x : inst.weights)
    w.push_back(detail::scale_exact(x, alpha));

  BigInt target;
  if (inst.kind == ProblemKind::Partition) {
    BigInt total = 0;
    for (const auto &x : w)
      total += x;
    if (total % 2 != 0) {
      d.stats.elapsed_seconds = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - start).count();
      return d;
    }
    target = total / 2;
  } else {
    target = detail::scale_exact(*inst.capacity, alpha);
  }

  const BigInt rows = BigInt(static_cast<unsigned long>(inst.size() + 1));
  const BigInt cells = rows * (target + 1);
  if (cells > BigInt(std::to_string(limits.max_table_cells))) {
    std::ostringstream msg;
    msg << "DP table " << rows.get_str() << " x " << BigInt(target + 1).get_str()
        << " exceeds budget " << limits.max_table_cells
        << " cells (alpha = " << alpha.get_str() << ")";
    throw Error(ErrorKind::ResourceLimit, msg.str());
  }
  const std::uint64_t cap = detail::to_u64(target);
  d.stats.rows = inst.size() + 1;
  d.stats.cols = cap + 1;

  // Weights above the target can never be used; clamp so they fit in u64.
  std::vector<std::uint64_t> wi;
  for (const auto &x : w)
    wi.push_back(x > target ? cap + 1 : detail::to_u64(x));

  switch (inst.kind) {
  case ProblemKind::Partition:
  case ProblemKind::SubsetSum01:
    d.witness = detail::subset_sum_01(wi, cap);
    break;
  case ProblemKind::UnboundedSubsetSum:
    d.witness = detail::subset_sum_unbounded(wi, cap);
    break;
  case ProblemKind::Knapsack01:
  case ProblemKind::UnboundedKnapsack: {
    if (!inst.threshold)
      throw Error(ErrorKind::Shape, "knapsack decision needs a threshold");
    std::vector<Rational> profit_side = inst.profits;
    profit_side.push_back(*inst.threshold);
    d.stats.profit_alpha = detail::lcm_of(profit_side);
    const BigInt goal = detail::scale_exact(*inst.threshold, d.stats.profit_alpha);
    if (goal > BigInt(std::numeric_limits<std::int64_t>::max() / 4))
      throw Error(ErrorKind::ResourceLimit,
                  "scaled threshold " + goal.get_str() + " too large");
    const auto goal64 = static_cast<std::int64_t>(detail::to_u64(goal));
    std::vector<std::int64_t> vi;
    for (const auto &x : inst.profits) {
      const BigInt s = detail::scale_exact(x, d.stats.profit_alpha);
      vi.push_back(s > goal ? goal64 : static_cast<std::int64_t>(detail::to_u64(s)));
    }
    if (inst.kind == ProblemKind::UnboundedKnapsack && goal64 > 0) {
      // A free item with positive profit can be repeated until V is met.
      for (std::size_t i = 0; i < inst.size(); ++i)
        if (inst.weights[i].is_zero() && vi[i] > 0) {
          Witness q(inst.size(), 0);
          q[i] = static_cast<std::uint64_t>((goal64 + vi[i] - 1) / vi[i]);
          d.witness = q;
          break;
        }
    }
    if (!d.witness) {
      auto [best, q] = inst.kind == ProblemKind::Knapsack01
                           ? detail::knapsack_01(wi, vi, cap, goal64)
                           : detail::knapsack_unbounded(wi, vi, cap, goal64);
      if (best >= goal64)
        d.witness = std::move(q);
    }
    break;
  }
  }
  d.yes = d.witness.has_value();
  d.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return d;
}

namespace detail {

class OracleSearch {
public:
  OracleSearch(const Instance &inst, std::uint64_t max_nodes)
      : inst_(inst), max_nodes_(max_nodes), q_(inst.size(), 0) {}

  std::optional<Witness> run() {
    const auto k = inst_.kind;
    if (k == ProblemKind::Partition) {
      goal_ = total_weight(inst_) * Rational::normalize(1, 2);
    } else {
      goal_ = *inst_.capacity;
    }
    if (is_knapsack(k)) {
      if (!inst_.threshold)
        throw Error(ErrorKind::Shape, "knapsack decision needs a threshold");
      if (k == ProblemKind::UnboundedKnapsack && inst_.threshold->sign() > 0)
        for (std::size_t i = 0; i < inst_.size(); ++i)
          if (inst_.weights[i].is_zero() && inst_.profits[i].sign() > 0) {
            Witness q(inst_.size(), 0);
            q[i] = to_u64((*inst_.threshold / inst_.profits[i]).ceil());
            return q;
          }
    }
    if (search(0, Rational(), Rational()))
      return q_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  bool search(std::size_t i, const Rational &weight, const Rational &profit) {
    if (++nodes_ > max_nodes_)
      throw Error(ErrorKind::ResourceLimit,
                  "oracle search exceeded " + std::to_string(max_nodes_) +
                      " nodes");
    if (weight > goal_)
      return false;
    if (i == inst_.size()) {
      if (is_knapsack(inst_.kind))
        return profit >= *inst_.threshold;
      return weight == goal_;
    }
    const Rational &w = inst_.weights[i];
    std::uint64_t bound = 1;
    if (is_unbounded(inst_.kind))
      bound = w.is_zero() ? 0 : to_u64(((goal_ - weight) / w).floor());
    Rational wsum = weight, psum = profit;
    for (std::uint64_t x = 0; x <= bound; ++x) {
      q_[i] = x;
      if (search(i + 1, wsum, psum))
        return true;
      wsum += w;
      if (!inst_.profits.empty())
        psum += inst_.profits[i];
    }
    q_[i] = 0;
    return false;
  }

  const Instance &inst_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  Rational goal_;
  Witness q_;
};

} // namespace detail

/// Exhaustive search over quantity vectors (q_i <= W/w_i, or q_i in {0,1}),
/// pruned on weight. Zero-weight items stay at 0 except the free-profit
/// shortcut for unbounded knapsack.
inline Decision oracle_decide(const Instance &inst,
                              const SolverLimits &limits = {}) {
  inst.validate();
  const auto start = std::chrono::steady_clock::now();
  detail::OracleSearch search(inst, limits.max_oracle_nodes);
  Decision d;
  d.witness = search.run();
  d.yes = d.witness.has_value();
  d.stats.nodes = search.nodes();
  d.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return d;
}

} // namespace ratsat
