#pragma once

#include "emoswarm/controllers.hpp"
#include "emoswarm/types.hpp"

namespace emoswarm {

/// Half footprint of a 10 cm x 10 cm robot.
inline constexpr double kRobotRadius = 0.05;
inline constexpr double kMaxTimestep = 0.1;

/// Explicit Euler step of the unicycle kinematics; heading is re-wrapped.
/// Throws BadTimestep unless 0 < dt <= kMaxTimestep.
Pose step_unicycle(const Pose& pose, const UniControl& cmd, double dt);

/// Keeps the robot inside the domain shrunk by `margin` on every side.
Pose clamp_to_domain(const Pose& pose, const Domain& domain, double margin = kRobotRadius);

}  // namespace emoswarm
