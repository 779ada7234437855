// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line front end. Kept as a header with stream parameters so the
// test suite can drive it in-process.
//
// Exit codes: 0 decision reached (YES or NO alike), 2 input/usage error,
// 3 resource limit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratsat/ratsat.hpp"

namespace ratsat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

namespace detail {

inline std::string read_source(const std::string &path, std::istream &in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline std::size_t parse_count(const std::string &text) {
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw CLI::ValidationError("n", "expected a positive integer, got '" + text + "'");
  const auto n = std::stoul(text);
  if (n == 0)
    throw CLI::ValidationError("n", "n must be at least 1");
  return n;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::istream &in,
               std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact rational subset-sum/knapsack solvers and SAT reductions",
               "ratsat"};
  app.require_subcommand(1);

  std::string count_text;
  bool unary = false;
  auto *primes = app.add_subcommand("primes", "Print the first n primes");
  primes->add_option("n", count_text, "How many primes")->required();
  primes->add_flag("--unary-size", unary, "Print their total unary length");

  std::string gadget_kind, cnf_path;
  bool gadget_le4 = false;
  auto *gadget = app.add_subcommand("gadget", "Apply a formula gadget");
  gadget->add_option("kind", gadget_kind, "one-in-three | all-same")
      ->required()
      ->check(CLI::IsMember({"one-in-three", "all-same"}));
  gadget->add_option("input", cnf_path, "DIMACS file or '-'")->required();
  gadget->add_flag("--require-le4", gadget_le4,
                   "Reject inputs with a variable occurring more than 4 times");

  bool as_partition = false;
  auto *reduce = app.add_subcommand("reduce", "Formula to rational subset-sum instance");
  reduce->add_option("input", cnf_path, "DIMACS file or '-'")->required();
  reduce->add_flag("--partition", as_partition, "Emit a partition instance");

  std::string inst_path, witness_path, rho_text;
  bool use_oracle = false;
  auto *solve = app.add_subcommand("solve", "Decide an instance exactly");
  solve->add_option("instance", inst_path, "Instance file or '-'")->required();
  solve->add_flag("--oracle", use_oracle, "Use exhaustive enumeration");

  auto *verify = app.add_subcommand("verify", "Check a witness");
  verify->add_option("instance", inst_path, "Instance file or '-'")->required();
  verify->add_option("witness", witness_path, "Witness file or '-'")->required();

  auto *approx = app.add_subcommand("approx", "Approximate 0-1 knapsack");
  approx->add_option("instance", inst_path, "Instance file or '-'")->required();
  approx->add_option("--rho", rho_text, "Relative error in (0,1)")->required();

  auto *size = app.add_subcommand("size", "Binary/unary sizes before and after scaling");
  size->add_option("instance", inst_path, "Instance file or '-'")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (primes->parsed()) {
      std::size_t n = 0;
      try {
        n = detail::parse_count(count_text);
      } catch (const CLI::ValidationError &e) {
        err << "ratsat primes: " << e.what() << '\n';
        return kExitInput;
      }
      if (unary) {
        out << unary_size_of_first_primes(n).get_str() << '\n';
      } else {
        const auto list = first_n_primes(n);
        for (std::size_t i = 0; i < list.count(); ++i)
          out << (i ? " " : "") << list.primes[i];
        out << '\n';
      }
    } else if (gadget->parsed()) {
      const Formula f = parse_dimacs(detail::read_source(cnf_path, in));
      if (gadget_kind == "one-in-three")
        out << to_dimacs(one_in_three_gadget(f, gadget_le4));
      else
        out << to_dimacs(all_same_gadget(f));
    } else if (reduce->parsed()) {
      const Formula f = parse_dimacs(detail::read_source(cnf_path, in));
      const ReducedInstance ri = build_instance(f);
      out << certificate_comments(ri.certificate)
          << to_text(as_partition ? as_partition_instance(ri)
                                  : as_subset_sum_instance(ri));
    } else if (solve->parsed()) {
      const Instance inst = parse_instance(detail::read_source(inst_path, in));
      const Decision d = use_oracle ? oracle_decide(inst) : decide(inst);
      if (d.yes)
        out << "YES\n" << to_text(*d.witness) << '\n';
      else
        out << "NO\n";
    } else if (verify->parsed()) {
      const Instance inst = parse_instance(detail::read_source(inst_path, in));
      const Witness q = parse_witness(detail::read_source(witness_path, in));
      out << (verify_witness(inst, q) ? "VALID" : "INVALID") << '\n';
    } else if (approx->parsed()) {
      const Instance inst = parse_instance(detail::read_source(inst_path, in));
      const ApproxParams params(Rational::parse(rho_text));
      const ApproxResult r = knapsack_fptas(inst, params);
      out << to_text(r.subset) << '\n'
          << "profit: " << r.achieved_profit << '\n';
    } else if (size->parsed()) {
      const Instance inst = parse_instance(detail::read_source(inst_path, in));
      const SizeMeasures m = measure_sizes(inst);
      out << "binary,unary,scaled_binary,scaled_unary,alpha\n"
          << m.binary << ',' << m.unary.get_str() << ',' << m.scaled_binary
          << ',' << m.scaled_unary.get_str() << ',' << m.alpha.get_str()
          << '\n';
    }
  } catch (const Error &e) {
    err << "ratsat: " << e.what() << '\n';
    return e.kind() == ErrorKind::ResourceLimit ? kExitResource : kExitInput;
  }
  return kExitOk;
}

} // namespace ratsat::cli
