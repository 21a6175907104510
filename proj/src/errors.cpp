#include "quatcurve/errors.hpp"

#include <sstream>

namespace quatcurve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::DomainExceeded: return "DomainExceeded";
    case ErrorKind::FrameUndefined: return "FrameUndefined";
    case ErrorKind::CurveSingular: return "CurveSingular";
    case ErrorKind::NotUnitSpeed: return "NotUnitSpeed";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::InvoluteSingular: return "InvoluteSingular";
    case ErrorKind::HigherFrameIndeterminate: return "HigherFrameIndeterminate";
    case ErrorKind::CurvatureZero: return "CurvatureZero";
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    case ErrorKind::NotSpatial: return "NotSpatial";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

namespace {
std::string frame_message(FrameVector which, double s) {
  std::ostringstream os;
  os << (which == FrameVector::N ? "N" : "E") << " is undefined at s = " << s;
  return os.str();
}
}  // namespace

FrameUndefined::FrameUndefined(FrameVector which, double s)
    : GeometryError(ErrorKind::FrameUndefined, frame_message(which, s)), which_(which), s_(s) {}

}  // namespace quatcurve
