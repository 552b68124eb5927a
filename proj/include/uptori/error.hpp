#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uptori {

enum class ErrorKind {
  BadAlphabet,
  BadSymbol,
  LengthMismatch,
  TargetNotTotal,
  BadWindowLength,
  TooLarge,
  OutOfBounds,
  ShapeTooLarge,
  ModeMismatch,
  BadP,
  NotAnUpword,
  NotAnUpcycle,
  NotADeBruijnCycle,
  RotationOutOfRange,
  CertificationFailed,
  NotTotal,
  ShapeMismatch,
  LemmaViolation,
  UnequalFamilyLengths,
  NotAnUpfamily,
  DiamondicityNotOne,
  DoubleCoverage,
  ConditionsNotMet,
  BadCut,
  BadBlock,
  DuplicateMember,
  SpecTooLarge,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace uptori
