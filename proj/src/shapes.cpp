#include "emoswarm/shapes.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace emoswarm {
namespace {

void require_kind(const ContourParams& params, ContourKind kind) {
  if (params.kind != kind) {
    throw Error(ErrorCode::WrongKind, "expected " + std::string(to_string(kind)) + " contour, got " +
                                          std::string(to_string(params.kind)));
  }
}

Vec2 polar(const Vec2& center, double radius, double theta) {
  return center + Vec2{radius * std::cos(theta), radius * std::sin(theta)};
}

}  // namespace

std::string_view to_string(ContourKind kind) {
  switch (kind) {
    case ContourKind::Happiness: return "happiness";
    case ContourKind::Surprise: return "surprise";
    case ContourKind::Sadness: return "sadness";
  }
  return "sadness";
}

void ContourParams::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorCode::InvalidArgument, what); };
  if (!(phase_rate > 0.0) || !std::isfinite(phase_rate)) fail("contour phase_rate must be positive");
  switch (kind) {
    case ContourKind::Happiness:
      if (!(radius > 0.0)) fail("contour radius must be positive");
      if (!(amplitude >= 0.0)) fail("contour amplitude must be nonnegative");
      if (frequency < 1) fail("contour frequency must be a positive integer");
      break;
    case ContourKind::Surprise:
      if (!(radius_min > 0.0) || !(radius_min < radius_max)) {
        fail("contour radii require 0 < radius_min < radius_max");
      }
      if (!(expansion_rate > 0.0)) fail("contour expansion_rate must be positive");
      break;
    case ContourKind::Sadness:
      if (!(radius > 0.0)) fail("contour radius must be positive");
      break;
  }
}

Vec2 happiness_contour(double theta, const ContourParams& params) {
  require_kind(params, ContourKind::Happiness);
  return polar(params.center, params.radius + params.amplitude * std::sin(params.frequency * theta), theta);
}

double surprise_radius(double t, const ContourParams& params) {
  const double span = params.radius_max - params.radius_min;
  return std::fmod(params.expansion_rate * t, span) + params.radius_min;
}

Vec2 surprise_contour(double theta, double t, const ContourParams& params) {
  require_kind(params, ContourKind::Surprise);
  return polar(params.center, surprise_radius(t, params), theta);
}

Vec2 sadness_contour(double theta, const ContourParams& params) {
  require_kind(params, ContourKind::Sadness);
  return polar(params.center, params.radius, theta);
}

Vec2 contour_point(double theta, double t, const ContourParams& params) {
  switch (params.kind) {
    case ContourKind::Happiness: return happiness_contour(theta, params);
    case ContourKind::Surprise: return surprise_contour(theta, t, params);
    case ContourKind::Sadness: return sadness_contour(theta, params);
  }
  return params.center;
}

Vec2 contour_velocity(double theta, double t, const ContourParams& params) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double w = params.phase_rate;
  double r = params.radius;
  double r_dot = 0.0;
  switch (params.kind) {
    case ContourKind::Happiness:
      r = params.radius + params.amplitude * std::sin(params.frequency * theta);
      r_dot = params.amplitude * params.frequency * std::cos(params.frequency * theta) * w;
      break;
    case ContourKind::Surprise:
      r = surprise_radius(t, params);
      r_dot = params.expansion_rate;
      break;
    case ContourKind::Sadness:
      break;
  }
  return {r_dot * c - r * w * s, r_dot * s + r * w * c};
}

double wrap_phase(double t, double theta0, double phase_rate) {
  const double a = phase_rate * t + theta0;
  double r = std::atan2(std::sin(a), std::cos(a));
  if (r >= std::numbers::pi) r = -std::numbers::pi;
  return r;
}

ContourPlacement initial_placement_contour(int count, const ContourParams& params, double t0) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "robot count must be at least 1");
  ContourPlacement placement;
  placement.positions.reserve(count);
  placement.phases.reserve(count);
  for (int i = 1; i <= count; ++i) {
    const double phase = wrap_phase(0.0, 2.0 * std::numbers::pi * i / count, 1.0);
    placement.phases.push_back(phase);
    placement.positions.push_back(contour_point(phase, t0, params));
  }
  return placement;
}

}  // namespace emoswarm
