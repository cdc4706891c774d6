#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlogic {

enum class ErrorKind {
  NotHermitian,
  DimensionMismatch,
  InvalidProjection,
  EmptyInterval,
  UndefinedAtSpectrum,
  NotDedekindCut,
  NotDensityMatrix,
  SyntaxError,
  UnknownObservable,
  UnknownState,
  UnknownProcess,
  ProbabilityOutOfRange,
  NotATautology,
  NotJointlyDeterminate,
  NotUnitary,
  MalformedPovm,
  InvalidTolerance,
  ModelFormat,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure; `offset` is the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::SyntaxError, "at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qlogic
