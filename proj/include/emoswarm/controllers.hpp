#pragma once

#include <cstddef>
#include <span>

#include "emoswarm/densities.hpp"
#include "emoswarm/geometry.hpp"
#include "emoswarm/types.hpp"

namespace emoswarm {

/// Velocity command for an omnidirectional point robot.
struct SIControl {
  Vec2 u;
};

/// Linear and angular velocity command for a differential-drive robot.
struct UniControl {
  double v = 0.0;
  double omega = 0.0;
  friend bool operator==(const UniControl&, const UniControl&) = default;
};

/// Near-identity transform parameters: `lookahead` is the distance of the
/// steered point ahead of the wheel axis; `gain` scales the whole command.
struct DiffeoParams {
  double lookahead = 0.05;
  double gain = 1.0;

  void validate() const;
};

struct SaturationLimits {
  bool enabled = true;
  double v_max = 1.0;
  double omega_max = 10.0;

  void validate() const;
};

/// Unit-gain proportional tracking: u = target - p.
SIControl goto_goal_si(const Vec2& p, const Vec2& target);

/// u = kappa (c_i - p_i), c_i the weighted centroid of robot i's Voronoi cell.
SIControl coverage_si(std::span<const Vec2> positions, std::size_t index,
                      const DensityField& density, double kappa,
                      int resolution = kDefaultQuadratureResolution);

/// v = K (ux cos(theta) + uy sin(theta)), omega = K/l (-ux sin(theta) + uy cos(theta)).
///
/// Under unicycle kinematics the point p + l (cos(theta), sin(theta)) then moves
/// with velocity K u.
UniControl si_to_uni(const SIControl& control, double theta, const DiffeoParams& params);

/// Clamps each component independently to its symmetric limit.
UniControl saturate(const UniControl& cmd, double v_max, double omega_max);
UniControl saturate(const UniControl& cmd, const SaturationLimits& limits);

}  // namespace emoswarm
