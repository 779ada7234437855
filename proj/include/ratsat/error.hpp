// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratsat {

enum class ErrorKind {
  InvalidDenominator,
  EmptyInput,
  OutOfRange,
  Shape,
  InvalidPrimes,
  Hypothesis,
  Parse,
  Arity,
  OccurrenceBound,
  ResourceLimit,
  InvalidWitness,
  Parameter,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidDenominator: return "invalid-denominator";
  case ErrorKind::EmptyInput: return "empty-input";
  case ErrorKind::OutOfRange: return "out-of-range";
  case ErrorKind::Shape: return "shape";
  case ErrorKind::InvalidPrimes: return "invalid-primes";
  case ErrorKind::Hypothesis: return "hypothesis";
  case ErrorKind::Parse: return "parse";
  case ErrorKind::Arity: return "arity";
  case ErrorKind::OccurrenceBound: return "occurrence-bound";
  case ErrorKind::ResourceLimit: return "resource-limit";
  case ErrorKind::InvalidWitness: return "invalid-witness";
  case ErrorKind::Parameter: return "parameter";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace ratsat
