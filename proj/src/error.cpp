#include "uptori/error.hpp"

namespace uptori {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadAlphabet: return "BadAlphabet";
    case ErrorKind::BadSymbol: return "BadSymbol";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TargetNotTotal: return "TargetNotTotal";
    case ErrorKind::BadWindowLength: return "BadWindowLength";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OutOfBounds: return "OutOfBounds";
    case ErrorKind::ShapeTooLarge: return "ShapeTooLarge";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::BadP: return "BadP";
    case ErrorKind::NotAnUpword: return "NotAnUpword";
    case ErrorKind::NotAnUpcycle: return "NotAnUpcycle";
    case ErrorKind::NotADeBruijnCycle: return "NotADeBruijnCycle";
    case ErrorKind::RotationOutOfRange: return "RotationOutOfRange";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::UnequalFamilyLengths: return "UnequalFamilyLengths";
    case ErrorKind::NotAnUpfamily: return "NotAnUpfamily";
    case ErrorKind::DiamondicityNotOne: return "DiamondicityNotOne";
    case ErrorKind::DoubleCoverage: return "DoubleCoverage";
    case ErrorKind::ConditionsNotMet: return "ConditionsNotMet";
    case ErrorKind::BadCut: return "BadCut";
    case ErrorKind::BadBlock: return "BadBlock";
    case ErrorKind::DuplicateMember: return "DuplicateMember";
    case ErrorKind::SpecTooLarge: return "SpecTooLarge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace uptori
