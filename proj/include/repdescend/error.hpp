#pragma once

#include <stdexcept>
#include <string>

namespace repdescend {

enum class ErrorKind {
  InvalidPrime,
  InvalidArgument,
  FieldTooLarge,
  NoEmbedding,
  FieldMismatch,
  AlgebraMismatch,
  NotInvertible,
  InvalidAlgebra,
  InvalidModule,
  InvalidGroup,
  UnknownGroup,
  ZeroModule,
  NotIndecomposable,
  AlgebraNotDefinedOverF,
  CharTwoDegenerate,
  Parse,
  Io,
  InternalInvariantViolation,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::UnknownGroup: return "UnknownGroup";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotIndecomposable: return "NotIndecomposable";
    case ErrorKind::AlgebraNotDefinedOverF: return "AlgebraNotDefinedOverF";
    case ErrorKind::CharTwoDegenerate: return "CharTwoDegenerate";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so the CLI can map it
/// onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void ensure(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace repdescend
