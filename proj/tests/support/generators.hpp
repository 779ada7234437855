// SPDX-License-Identifier: Apache-2.0
#pragma once

// Deterministic formula and instance generators shared by the unit and
// acceptance suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ratsat/ratsat.hpp"

namespace ratsat::gen {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng &rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline Formula make_formula(std::uint32_t n,
                            std::initializer_list<std::array<long, 3>> clauses) {
  std::vector<Clause> cs;
  for (const auto &c : clauses)
    cs.push_back({Literal::from_dimacs(c[0]), Literal::from_dimacs(c[1]),
                  Literal::from_dimacs(c[2])});
  return Formula(n, std::move(cs));
}

namespace detail {

using Shape = std::vector<Clause>;

inline Shape sorted_shape(std::vector<Clause> clauses) {
  for (auto &c : clauses)
    std::sort(c.begin(), c.end());
  std::sort(clauses.begin(), clauses.end());
  return clauses;
}

/// Least image of the clause multiset under variable renaming and polarity
/// flips.
inline Shape canonical_shape(std::uint32_t n, const std::vector<Clause> &cs) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Shape best;
  bool first = true;
  do {
    for (std::uint32_t flips = 0; flips < (1U << n); ++flips) {
      std::vector<Clause> img = cs;
      for (auto &c : img)
        for (auto &lit : c) {
          const auto v = lit.variable;
          lit = {perm[v - 1], lit.positive != (((flips >> (v - 1)) & 1U) != 0)};
        }
      Shape s = sorted_shape(std::move(img));
      if (first || s < best) {
        best = std::move(s);
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

} // namespace detail

/// Every 3-CNF<=4 formula with 1..max_n variables (all of them used) and
/// 1..max_m clauses, one representative per renaming/polarity class.
/// Clause literals are unordered multisets.
inline std::vector<Formula> formula_family(std::uint32_t max_n,
                                           std::uint32_t max_m) {
  std::vector<Formula> out;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    std::vector<Literal> lits;
    for (std::uint32_t v = 1; v <= n; ++v) {
      lits.push_back({v, true});
      lits.push_back({v, false});
    }
    std::vector<Clause> clause_shapes;
    const auto L = lits.size();
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = a; b < L; ++b)
        for (std::size_t c = b; c < L; ++c)
          clause_shapes.push_back({lits[a], lits[b], lits[c]});

    std::set<detail::Shape> seen;
    // Nondecreasing index tuples enumerate clause multisets.
    std::vector<std::size_t> idx;
    auto emit = [&](const std::vector<std::size_t> &pick) {
      std::vector<Clause> cs;
      for (auto k : pick)
        cs.push_back(clause_shapes[k]);
      Formula f(n, cs);
      if (!f.is_le4())
        return;
      for (auto occ : f.occurrence_table())
        if (occ == 0)
          return;
      if (seen.insert(detail::canonical_shape(n, cs)).second)
        out.push_back(std::move(f));
    };
    for (std::uint32_t m = 1; m <= max_m; ++m) {
      idx.assign(m, 0);
      for (;;) {
        emit(idx);
        std::size_t pos = m;
        while (pos > 0 && idx[pos - 1] == clause_shapes.size() - 1)
          --pos;
        if (pos == 0)
          break;
        ++idx[pos - 1];
        for (std::size_t k = pos; k < m; ++k)
          idx[k] = idx[pos - 1];
      }
    }
  }
  return out;
}

/// Random 3-CNF<=4 formula; n and m are drawn uniformly up to the limits.
inline Formula random_le4_formula(Rng &rng, std::uint32_t max_n,
                                  std::uint32_t max_m) {
  for (;;) {
    const auto n = static_cast<std::uint32_t>(uniform(rng, 1, max_n));
    const auto m = static_cast<std::uint32_t>(uniform(rng, 1, max_m));
    if (3 * m > 4 * n)
      continue;
    std::vector<std::uint32_t> occ(n, 0);
    std::vector<Clause> cs;
    bool ok = true;
    for (std::uint32_t j = 0; j < m && ok; ++j) {
      Clause c;
      for (auto &lit : c) {
        std::vector<std::uint32_t> free;
        for (std::uint32_t v = 0; v < n; ++v)
          if (occ[v] < kMaxOccurrences)
            free.push_back(v);
        if (free.empty()) {
          ok = false;
          break;
        }
        const auto v = free[uniform(rng, 0, free.size() - 1)];
        ++occ[v];
        lit = {v + 1, uniform(rng, 0, 1) == 1};
      }
      cs.push_back(c);
    }
    if (ok)
      return Formula(n, std::move(cs));
  }
}

inline Rational random_rational(Rng &rng, long max_num, long max_den) {
  const auto den = static_cast<long>(uniform(rng, 1, max_den));
  const auto num = static_cast<long>(uniform(rng, 0, max_num));
  return Rational::normalize(num, den);
}

/// Random instance of `kind` with up to `max_items` items and denominators
/// at most `max_den`. Capacities are drawn near a random subset sum so that
/// both answers show up.
inline Instance random_instance(Rng &rng, ProblemKind kind,
                                std::size_t max_items, long max_den) {
  const auto count = uniform(rng, 0, max_items);
  std::vector<Rational> w, v;
  for (std::size_t i = 0; i < count; ++i) {
    w.push_back(random_rational(rng, 2 * max_den, max_den));
    if (is_knapsack(kind))
      v.push_back(random_rational(rng, 2 * max_den, max_den));
  }
  if (kind == ProblemKind::Partition)
    return Instance::partition(std::move(w));
  Rational cap;
  for (const auto &x : w)
    if (uniform(rng, 0, 1))
      cap += x;
  if (uniform(rng, 0, 3) == 0)
    cap += random_rational(rng, 3, max_den);
  if (!is_knapsack(kind))
    return Instance::subset_sum(kind, std::move(w), cap);
  Rational thr;
  for (const auto &x : v)
    if (uniform(rng, 0, 2) == 0)
      thr += x;
  return Instance::knapsack(kind, std::move(w), std::move(v), cap, thr);
}

/// Exhaustive instance family over a fixed value grid (denominators <= 10).
/// For each kind: every multiset of at most `max_items` grid values with
/// every grid capacity (and threshold).
inline std::vector<Instance> grid_instances(ProblemKind kind,
                                            std::size_t max_items) {
  const std::vector<Rational> grid = {
      Rational(0), Rational::normalize(1, 2), Rational::normalize(1, 3),
      Rational::normalize(3, 10), Rational::normalize(7, 5), Rational(1)};
  const std::vector<Rational> knap_w = {Rational::normalize(1, 2),
                                        Rational::normalize(1, 3),
                                        Rational::normalize(7, 10), Rational(0)};
  const std::vector<Rational> knap_v = {Rational::normalize(3, 4),
                                        Rational::normalize(1, 5), Rational(1)};
  const std::vector<Rational> caps = {Rational(0), Rational::normalize(5, 6),
                                      Rational(1), Rational::normalize(13, 10)};

  std::vector<std::pair<Rational, Rational>> atoms;
  if (is_knapsack(kind)) {
    for (const auto &w : knap_w)
      for (const auto &v : knap_v)
        atoms.emplace_back(w, v);
    max_items = std::min<std::size_t>(max_items, 4);
  } else {
    for (const auto &w : grid)
      atoms.emplace_back(w, Rational());
  }

  std::vector<Instance> out;
  std::vector<std::size_t> idx;
  auto emit = [&] {
    std::vector<Rational> w, v;
    for (auto k : idx) {
      w.push_back(atoms[k].first);
      v.push_back(atoms[k].second);
    }
    if (kind == ProblemKind::Partition) {
      out.push_back(Instance::partition(w));
      return;
    }
    for (const auto &cap : caps) {
      if (!is_knapsack(kind)) {
        out.push_back(Instance::subset_sum(kind, w, cap));
        continue;
      }
      for (const auto &thr : {Rational(0), Rational::normalize(3, 4),
                              Rational::normalize(19, 20), Rational(2)})
        out.push_back(Instance::knapsack(kind, w, v, cap, thr));
    }
  };
  for (std::size_t m = 0; m <= max_items; ++m) {
    idx.assign(m, 0);
    for (;;) {
      emit();
      std::size_t pos = m;
      while (pos > 0 && idx[pos - 1] == atoms.size() - 1)
        --pos;
      if (pos == 0)
        break;
      ++idx[pos - 1];
      for (std::size_t k = pos; k < m; ++k)
        idx[k] = idx[pos - 1];
    }
  }
  return out;
}

/// Exact knapsack optimum by plain subset enumeration over rationals.
inline Rational brute_force_opt(const Instance &inst) {
  Rational best;
  const std::size_t n = inst.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational w, v;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) {
        w += inst.weights[i];
        v += inst.profits[i];
      }
    if (w <= *inst.capacity && v > best)
      best = v;
  }
  return best;
}

} // namespace ratsat::gen
