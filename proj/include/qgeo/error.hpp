#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgeo {

enum class ErrorKind {
  InvalidArgument,
  NotHermitian,
  DimensionMismatch,
  NotNormalized,
  OrthogonalSourceTarget,
  CoincidentStates,
  DegenerateOverlap,
  StepTooLarge,
  EmptyTrajectory,
  NotOrthogonal,
  EpsilonOutOfRange,
  NonUnitAxis,
  NoProgress,
  NumericalCheck,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qgeo
