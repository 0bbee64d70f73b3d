#include "rank1/error.hpp"
#include "rank1/verdict.hpp"

namespace rank1 {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::InvalidStage: return "InvalidStage";
    case ErrorKind::InvalidTail: return "InvalidTail";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PrecedenceViolation: return "PrecedenceViolation";
    case ErrorKind::NonRepresentable: return "NonRepresentable";
    case ErrorKind::DepthExhausted: return "DepthExhausted";
    case ErrorKind::DegenerateSpec: return "DegenerateSpec";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NoOccurrence: return "NoOccurrence";
    case ErrorKind::InsufficientContext: return "InsufficientContext";
    case ErrorKind::CoverageFailure: return "CoverageFailure";
    case ErrorKind::SchemeMismatch: return "SchemeMismatch";
    case ErrorKind::InvalidScheme: return "InvalidScheme";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::KindUnavailable: return "KindUnavailable";
  }
  return "Error";
}

const char* to_string(Answer answer) noexcept {
  switch (answer) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace rank1
