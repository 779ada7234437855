// SPDX-License-Identifier: Apache-2.0
#pragma once

/**
 * @file fptas.hpp
 * @brief Approximation scheme for 0-1 knapsack with rational coefficients.
 *
 * Multiplying every weight, profit and the capacity by the lcm of their
 * denominators yields an integer instance whose optimum is alpha times the
 * original one and whose feasible sets are the same. Any integer FPTAS then
 * carries over. The integer FPTAS here is profit scaling: with
 * K = rho * v_max / n, profits are rounded down to floor(v_i / K) and a DP
 * over rounded profit finds the lightest subset for each profit level.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "ratsat/error.hpp"
#include "ratsat/instance.hpp"
#include "ratsat/rational.hpp"

namespace ratsat {

class ApproxParams {
public:
  explicit ApproxParams(Rational rho) : rho_(std::move(rho)) {
    if (rho_ <= Rational(0) || rho_ >= Rational(1))
      throw Error(ErrorKind::Parameter,
                  "rho must lie strictly between 0 and 1, got " +
                      rho_.to_string());
  }
  const Rational &rho() const { return rho_; }

private:
  Rational rho_;
};

struct ApproxResult {
  Witness subset;
  Rational achieved_profit;
  BigInt alpha = 1;
};

namespace detail {

inline void require_knapsack01(const Instance &inst) {
  inst.validate();
  if (inst.kind != ProblemKind::Knapsack01)
    throw Error(ErrorKind::Shape, "expected a knapsack-01 instance, got " +
                                      std::string(to_string(inst.kind)));
}

/// alpha over weights, profits and capacity (the threshold plays no role).
inline BigInt optimisation_alpha(const Instance &inst) {
  BigInt a = inst.capacity->denominator();
  for (std::size_t i = 0; i < inst.size(); ++i)
    a = lcm(lcm(a, inst.weights[i].denominator()), inst.profits[i].denominator());
  return a;
}

} // namespace detail

inline ApproxResult knapsack_fptas(const Instance &inst,
                                   const ApproxParams &params) {
  detail::require_knapsack01(inst);
  ApproxResult result;
  result.subset.assign(inst.size(), 0);
  result.alpha = detail::optimisation_alpha(inst);
  const BigInt &alpha = result.alpha;

  const BigInt capacity = detail::scale_exact(*inst.capacity, alpha);
  std::vector<std::size_t> items; // original indices of items that fit
  std::vector<BigInt> w, v;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    BigInt wi = detail::scale_exact(inst.weights[i], alpha);
    if (wi > capacity)
      continue;
    items.push_back(i);
    w.push_back(std::move(wi));
    v.push_back(detail::scale_exact(inst.profits[i], alpha));
  }
  BigInt v_max = 0;
  for (const auto &x : v)
    if (x > v_max)
      v_max = x;
  if (items.empty() || v_max == 0)
    return result;

  // floor(v_i * n / (rho * v_max)) with rho = a/b.
  const auto n = static_cast<unsigned long>(items.size());
  const BigInt scale_num = BigInt(n) * params.rho().denominator();
  const BigInt scale_den = params.rho().numerator() * v_max;
  std::vector<std::uint64_t> rounded;
  std::uint64_t total = 0;
  for (const auto &x : v) {
    const BigInt r = (x * scale_num) / scale_den;
    rounded.push_back(r.get_ui());
    total += r.get_ui();
  }

  // lightest[p]: minimum weight reaching rounded profit exactly p.
  std::vector<std::optional<BigInt>> lightest(total + 1);
  lightest[0] = BigInt(0);
  std::vector<std::vector<bool>> keep(items.size(),
                                      std::vector<bool>(total + 1, false));
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto rp = rounded[k];
    for (std::uint64_t p = total + 1; p-- > rp;) {
      const auto &from = lightest[p - rp];
      if (!from)
        continue;
      BigInt cand = *from + w[k];
      if (cand > capacity)
        continue;
      if (!lightest[p] || cand < *lightest[p]) {
        lightest[p] = std::move(cand);
        keep[k][p] = true;
      }
    }
  }

  std::uint64_t best = total;
  while (!lightest[best])
    --best;
  for (std::size_t k = items.size(); k-- > 0;)
    if (keep[k][best]) {
      result.subset[items[k]] = 1;
      best -= rounded[k];
    }
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (result.subset[i])
      result.achieved_profit += inst.profits[i];
  return result;
}

/// Exact optimum: subset enumeration up to 20 items, otherwise a DP over
/// scaled integer profits when that table fits `max_cells`.
inline Rational knapsack_opt_exact(const Instance &inst,
                                   std::uint64_t max_cells = 100'000'000) {
  detail::require_knapsack01(inst);
  const BigInt alpha = detail::optimisation_alpha(inst);
  const BigInt capacity = detail::scale_exact(*inst.capacity, alpha);
  std::vector<BigInt> w, v;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    w.push_back(detail::scale_exact(inst.weights[i], alpha));
    v.push_back(detail::scale_exact(inst.profits[i], alpha));
  }
  const std::size_t n = inst.size();
  BigInt best = 0;

  if (n <= 20) {
    // Depth-first over include/exclude, pruning overweight branches.
    struct Frame {
      std::size_t i;
      BigInt weight, profit;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.i == n) {
        if (f.profit > best)
          best = f.profit;
        continue;
      }
      stack.push_back({f.i + 1, f.weight, f.profit});
      BigInt nw = f.weight + w[f.i];
      if (nw <= capacity)
        stack.push_back({f.i + 1, std::move(nw), f.profit + v[f.i]});
    }
    return Rational::normalize(best, alpha);
  }

  BigInt total = 0;
  for (const auto &x : v)
    total += x;
  if (BigInt(static_cast<unsigned long>(n)) * (total + 1) >
      BigInt(std::to_string(max_cells)))
    throw Error(ErrorKind::ResourceLimit,
                "exact knapsack optimum needs a table of " + BigInt(total + 1).get_str() +
                    " profit levels");
  const std::uint64_t levels = total.get_ui();
  std::vector<std::optional<BigInt>> lightest(levels + 1);
  lightest[0] = BigInt(0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t rp = v[k].get_ui();
    for (std::uint64_t p = levels + 1; p-- > rp;)
      if (lightest[p - rp]) {
        BigInt cand = *lightest[p - rp] + w[k];
        if (cand <= capacity && (!lightest[p] || cand < *lightest[p]))
          lightest[p] = std::move(cand);
      }
  }
  std::uint64_t p = levels;
  while (!lightest[p])
    --p;
  return Rational::normalize(BigInt(static_cast<unsigned long>(p)), alpha);
}

} // namespace ratsat
