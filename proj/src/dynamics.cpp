#include "emoswarm/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace emoswarm {

Pose step_unicycle(const Pose& pose, const UniControl& cmd, double dt) {
  if (!(dt > 0.0) || dt > kMaxTimestep) {
    throw Error(ErrorCode::BadTimestep, "time step must lie in (0, 0.1] s");
  }
  return {pose.x + cmd.v * std::cos(pose.theta) * dt, pose.y + cmd.v * std::sin(pose.theta) * dt,
          wrap_angle(pose.theta + cmd.omega * dt)};
}

Pose clamp_to_domain(const Pose& pose, const Domain& domain, double margin) {
  const double mx = std::min(margin, 0.5 * domain.width());
  const double my = std::min(margin, 0.5 * domain.height());
  return {std::clamp(pose.x, domain.x_min + mx, domain.x_max - mx),
          std::clamp(pose.y, domain.y_min + my, domain.y_max - my), pose.theta};
}

}  // namespace emoswarm
