#include "emoswarm/types.hpp"

namespace emoswarm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ZeroMass: return "ZeroMass";
    case ErrorCode::NonpositiveSigma: return "NonpositiveSigma";
    case ErrorCode::BadMargin: return "BadMargin";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::BadTimestep: return "BadTimestep";
    case ErrorCode::PlacementFailure: return "PlacementFailure";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::MalformedLog: return "MalformedLog";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Domain Domain::from_size(double width, double height) {
  Domain d{0.0, width, 0.0, height};
  d.validate();
  return d;
}

void Domain::validate() const {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
        std::isfinite(y_max)) ||
      !(x_min < x_max) || !(y_min < y_max)) {
    throw Error(ErrorCode::InvalidArgument, "domain requires x_min < x_max and y_min < y_max");
  }
}

}  // namespace emoswarm
