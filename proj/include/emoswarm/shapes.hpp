#pragma once

#include <string_view>
#include <vector>

#include "emoswarm/types.hpp"

namespace emoswarm {

enum class ContourKind { Happiness, Surprise, Sadness };

std::string_view to_string(ContourKind kind);

/// Closed curve tracked by the contour behaviors, centered at `center`.
///
/// happiness: circle of `radius` with a superimposed sinusoid of `amplitude`
///            and integer `frequency` ripples per revolution.
/// surprise:  circle whose radius ramps from `radius_min` to `radius_max` at
///            `expansion_rate` (m/s), then restarts (sawtooth).
/// sadness:   circle of `radius`.
///
/// Fields that a kind does not use are ignored.
struct ContourParams {
  ContourKind kind = ContourKind::Sadness;
  Vec2 center;
  double radius = 0.1;
  double amplitude = 0.0;
  int frequency = 6;
  double radius_min = 0.1;
  double radius_max = 0.45;
  double expansion_rate = 0.035;
  /// Angular speed of the tracked point along the contour, rad/s.
  double phase_rate = 1.0;

  /// Throws InvalidArgument on a violated parameter invariant.
  void validate() const;
};

Vec2 happiness_contour(double theta, const ContourParams& params);
Vec2 surprise_contour(double theta, double t, const ContourParams& params);
Vec2 sadness_contour(double theta, const ContourParams& params);

/// Dispatches on params.kind.
Vec2 contour_point(double theta, double t, const ContourParams& params);
/// Time derivative of the tracked point when theta advances at params.phase_rate.
Vec2 contour_velocity(double theta, double t, const ContourParams& params);

double surprise_radius(double t, const ContourParams& params);

/// atan2(sin(rate t + theta0), cos(rate t + theta0)), canonicalized to [-pi, pi).
double wrap_phase(double t, double theta0, double phase_rate);

struct ContourPlacement {
  std::vector<Vec2> positions;
  std::vector<double> phases;
};

/// Robot i (1-based) starts at phase 2 pi i / N on the contour evaluated at t0.
ContourPlacement initial_placement_contour(int count, const ContourParams& params, double t0 = 0.0);

}  // namespace emoswarm
