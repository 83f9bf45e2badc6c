#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

// Every failure the library reports deliberately carries one of these kinds,
// so callers (and the CLI exit-code mapping) can dispatch without string
// matching.
enum class ErrorKind {
  SyntaxError,
  SchemaError,
  UnknownName,
  InvalidEquation,
  AllZero,
  ZeroSeries,
  RadixMismatch,
  MalformedBecker,
  UnderdeterminedSeeds,
  InconsistentSeeds,
  CompositePrime,
  EscalationCapExceeded,
  OrbitNotFinite,
  PreconditionViolated,
  DivisionCheckFailed,
  DimensionMismatch,
  TooFewTerms,
  InternalError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mahler
