#include "emoswarm/controllers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace emoswarm {

void DiffeoParams::validate() const {
  if (!(lookahead > 0.0) || !std::isfinite(lookahead)) {
    throw Error(ErrorCode::InvalidArgument, "diffeomorphism lookahead must be positive");
  }
  if (!(gain > 0.0) || !std::isfinite(gain)) {
    throw Error(ErrorCode::InvalidArgument, "diffeomorphism gain must be positive");
  }
}

void SaturationLimits::validate() const {
  if (!(v_max > 0.0) || !(omega_max > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "saturation limits must be positive");
  }
}

SIControl goto_goal_si(const Vec2& p, const Vec2& target) { return {target - p}; }

SIControl coverage_si(std::span<const Vec2> positions, std::size_t index, const DensityField& density,
                      double kappa, int resolution) {
  if (index >= positions.size()) {
    throw Error(ErrorCode::InvalidArgument, "robot index " + std::to_string(index) + " out of range");
  }
  const std::vector<VoronoiCell> cells = compute_voronoi(positions, density.domain);
  const Vec2 centroid = cell_centroid(cells[index], density, resolution);
  return {kappa * (centroid - positions[index])};
}

UniControl si_to_uni(const SIControl& control, double theta, const DiffeoParams& params) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Vec2& u = control.u;
  return {params.gain * (u.x * c + u.y * s), params.gain / params.lookahead * (-u.x * s + u.y * c)};
}

UniControl saturate(const UniControl& cmd, double v_max, double omega_max) {
  return {std::clamp(cmd.v, -v_max, v_max), std::clamp(cmd.omega, -omega_max, omega_max)};
}

UniControl saturate(const UniControl& cmd, const SaturationLimits& limits) {
  if (!limits.enabled) return cmd;
  return saturate(cmd, limits.v_max, limits.omega_max);
}

}  // namespace emoswarm
