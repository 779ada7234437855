// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ratsat/cnf.hpp"

namespace ratsat {

/// Where the three output clauses of one source clause came from.
struct GadgetProvenance {
  std::size_t source_clause; // 0-based index into the input formula
  std::size_t first_output;  // 0-based index of the first of three clauses
  std::uint32_t a, b, c, d;  // fresh variables
};

struct OneInThreeResult {
  Formula formula;
  std::vector<GadgetProvenance> provenance;
};

/// Replaces every clause (x | y | z) by
///   (~x | a | b) & (b | y | c) & (c | d | ~z)
/// with four fresh variables per clause, numbered n+4j+1..n+4j+4 for the
/// 0-based clause index j. The result is satisfiable in the one-in-three
/// sense iff the input is satisfiable.
inline OneInThreeResult one_in_three_gadget(const Formula &f,
                                            bool require_le4 = false) {
  if (require_le4)
    f.require_le4();
  const std::uint32_t n = f.num_vars();
  std::vector<Clause> out;
  out.reserve(3 * f.num_clauses());
  std::vector<GadgetProvenance> prov;
  prov.reserve(f.num_clauses());
  for (std::size_t j = 0; j < f.num_clauses(); ++j) {
    const Clause &src = f.clause(j);
    const auto base = n + 4 * static_cast<std::uint32_t>(j);
    const Literal a{base + 1, true}, b{base + 2, true}, c{base + 3, true},
        d{base + 4, true};
    prov.push_back({j, out.size(), a.variable, b.variable, c.variable,
                    d.variable});
    out.push_back({src[0].negated(), a, b});
    out.push_back({b, src[1], c});
    out.push_back({c, d, src[2].negated()});
  }
  return {Formula(n + 4 * static_cast<std::uint32_t>(f.num_clauses()),
                  std::move(out)),
          std::move(prov)};
}

struct AllSameResult {
  Formula formula;
  std::uint32_t fresh_variable;
};

/// Appends (x | x | ~x) on a fresh variable x = n+1. Under any valuation that
/// clause has one or two true occurrences, never zero or three.
inline AllSameResult all_same_gadget(const Formula &f) {
  const std::uint32_t x = f.num_vars() + 1;
  std::vector<Clause> clauses = f.clauses();
  clauses.push_back({Literal{x, true}, Literal{x, true}, Literal{x, false}});
  return {Formula(x, std::move(clauses)), x};
}

/// DIMACS text with provenance comments ahead of the header.
inline std::string to_dimacs(const OneInThreeResult &r) {
  std::ostringstream out;
  for (const auto &p : r.provenance) {
    const auto j = p.source_clause + 1;
    out << "c gadget " << j << " -> clauses " << 3 * j - 2 << ".." << 3 * j
        << " vars " << p.a << ' ' << p.b << ' ' << p.c << ' ' << p.d << '\n';
  }
  return out.str() + to_dimacs(r.formula);
}

inline std::string to_dimacs(const AllSameResult &r) {
  std::ostringstream out;
  out << "c all-same -> clause " << r.formula.num_clauses() << " var "
      << r.fresh_variable << '\n';
  return out.str() + to_dimacs(r.formula);
}

} // namespace ratsat
