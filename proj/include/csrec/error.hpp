#pragma once

#include <stdexcept>
#include <string>

namespace csrec {

// Every failure mode that callers are expected to distinguish.
enum class Errc {
  CycleDetected,
  BadCpt,
  IncompleteAssignment,
  ZeroProbabilityEvidence,
  DisjointnessViolation,
  UnknownNode,
  TooLarge,
  NonMarkovConfig,
  UnknownItem,
  TooDeep,
  BadRatios,
  EmptyData,
  ShapeMismatch,
  LengthMismatch,
  EmptyInput,
  SequenceTooShort,
  RoleMismatch,
  MissingFtilde,
  ParseError,
  ValidationError,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::BadCpt: return "BadCpt";
    case Errc::IncompleteAssignment: return "IncompleteAssignment";
    case Errc::ZeroProbabilityEvidence: return "ZeroProbabilityEvidence";
    case Errc::DisjointnessViolation: return "DisjointnessViolation";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NonMarkovConfig: return "NonMarkovConfig";
    case Errc::UnknownItem: return "UnknownItem";
    case Errc::TooDeep: return "TooDeep";
    case Errc::BadRatios: return "BadRatios";
    case Errc::EmptyData: return "EmptyData";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::SequenceTooShort: return "SequenceTooShort";
    case Errc::RoleMismatch: return "RoleMismatch";
    case Errc::MissingFtilde: return "MissingFtilde";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace csrec
