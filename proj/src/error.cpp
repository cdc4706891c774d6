#include "qlogic/error.hpp"

namespace qlogic {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidProjection: return "InvalidProjection";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::UndefinedAtSpectrum: return "UndefinedAtSpectrum";
    case ErrorKind::NotDedekindCut: return "NotDedekindCut";
    case ErrorKind::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownObservable: return "UnknownObservable";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::UnknownProcess: return "UnknownProcess";
    case ErrorKind::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorKind::NotATautology: return "NotATautology";
    case ErrorKind::NotJointlyDeterminate: return "NotJointlyDeterminate";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::MalformedPovm: return "MalformedPovm";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::ModelFormat: return "ModelFormat";
  }
  return "Unknown";
}

}  // namespace qlogic
