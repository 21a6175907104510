#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatcurve {

enum class ErrorKind {
  SpecInvalid,
  DomainExceeded,
  FrameUndefined,
  CurveSingular,
  NotUnitSpeed,
  EmptyDomain,
  InvoluteSingular,
  HigherFrameIndeterminate,
  CurvatureZero,
  DenominatorZero,
  NotSpatial,
};

std::string_view to_string(ErrorKind kind);

/// Base class of every error raised by the library. The kind is what callers
/// dispatch on; the message is for humans.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Which frame vector could not be normalized.
enum class FrameVector { N, E };

class FrameUndefined : public GeometryError {
 public:
  FrameUndefined(FrameVector which, double s);

  FrameVector which() const noexcept { return which_; }
  double parameter() const noexcept { return s_; }

 private:
  FrameVector which_;
  double s_;
};

}  // namespace quatcurve
