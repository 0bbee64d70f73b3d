#pragma once

#include <stdexcept>
#include <string>

namespace rank1 {

enum class ErrorKind {
  InvalidWord,
  InvalidStage,
  InvalidTail,
  ParseError,
  PrecedenceViolation,
  NonRepresentable,
  DepthExhausted,
  DegenerateSpec,
  NotADivisor,
  NoOccurrence,
  InsufficientContext,
  CoverageFailure,
  SchemeMismatch,
  InvalidScheme,
  LiftFailure,
  KindUnavailable,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rank1
