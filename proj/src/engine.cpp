#include "emoswarm/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "emoswarm/dynamics.hpp"

namespace emoswarm {
namespace {

void validate_count(int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "robot count must be at least 1");
}

std::vector<Vec2> positions_of(const SwarmState& state) {
  std::vector<Vec2> out;
  out.reserve(state.size());
  for (const Pose& p : state.poses) out.push_back(p.position());
  return out;
}

// Applies precomputed commands and moves the clock to t_next.
SwarmState advance(const SwarmState& state, const BehaviorSpec& spec, std::span<const UniControl> commands,
                   double dt, double t_next) {
  SwarmState next = state;
  for (std::size_t i = 0; i < state.size(); ++i) {
    next.poses[i] = clamp_to_domain(step_unicycle(state.poses[i], commands[i], dt), spec.domain);
  }
  next.step_index = state.step_index + 1;
  next.t = t_next;
  if (spec.contour) {
    for (std::size_t i = 0; i < next.initial_phases.size(); ++i) {
      next.phases[i] = wrap_phase(next.t, next.initial_phases[i], spec.contour->phase_rate);
    }
  }
  return next;
}

}  // namespace

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

SwarmState init_behavior(const BehaviorSpec& spec, int count, std::uint64_t seed) {
  spec.validate();
  validate_count(count);
  SwarmState state;
  state.rng.seed(seed);
  state.poses.reserve(count);

  if (spec.contour) {
    const ContourPlacement placement = initial_placement_contour(count, *spec.contour, 0.0);
    for (int i = 0; i < count; ++i) {
      const Vec2 p = placement.positions[i];
      const Vec2 tangent = contour_velocity(placement.phases[i], 0.0, *spec.contour);
      const double heading = squared_norm(tangent) > 0.0 ? std::atan2(tangent.y, tangent.x) : 0.0;
      state.poses.push_back(clamp_to_domain(Pose{p.x, p.y, wrap_angle(heading)}, spec.domain));
    }
    state.initial_phases = placement.phases;
    state.phases = placement.phases;
    return state;
  }

  const Domain& d = spec.domain;
  const double mx = std::min(kRobotRadius, 0.5 * d.width());
  const double my = std::min(kRobotRadius, 0.5 * d.height());
  const double min_gap = 2.0 * kRobotRadius;
  int attempts = 0;
  while (static_cast<int>(state.poses.size()) < count) {
    if (++attempts > kMaxPlacementAttempts) {
      throw Error(ErrorCode::PlacementFailure, "could not place " + std::to_string(count) +
                                                   " robots at least 0.1 m apart");
    }
    const Vec2 p{d.x_min + mx + uniform_unit(state.rng) * (d.width() - 2.0 * mx),
                 d.y_min + my + uniform_unit(state.rng) * (d.height() - 2.0 * my)};
    const bool clear = std::all_of(state.poses.begin(), state.poses.end(),
                                   [&](const Pose& q) { return norm(q.position() - p) >= min_gap; });
    if (!clear) continue;
    const double heading = -std::numbers::pi + 2.0 * std::numbers::pi * uniform_unit(state.rng);
    state.poses.push_back(Pose{p.x, p.y, wrap_angle(heading)});
  }
  return state;
}

std::vector<Vec2> compute_targets(const SwarmState& state, const BehaviorSpec& spec) {
  if (spec.contour) {
    std::vector<Vec2> targets;
    targets.reserve(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
      targets.push_back(contour_point(state.phases[i], state.t, *spec.contour));
    }
    return targets;
  }
  return voronoi_centroids(positions_of(state), *spec.density, spec.quadrature_resolution);
}

std::vector<UniControl> compute_commands(const SwarmState& state, const BehaviorSpec& spec) {
  const std::vector<Vec2> targets = compute_targets(state, spec);
  const double gain = spec.contour ? 1.0 : spec.kappa;
  std::vector<UniControl> commands;
  commands.reserve(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    SIControl u = goto_goal_si(state.poses[i].position(), targets[i]);
    u.u *= gain;
    commands.push_back(saturate(si_to_uni(u, state.poses[i].theta, spec.diffeo), spec.limits));
  }
  return commands;
}

SwarmState step(const SwarmState& state, const BehaviorSpec& spec, double dt) {
  const std::vector<UniControl> commands = compute_commands(state, spec);
  return advance(state, spec, commands, dt, state.t + dt);
}

std::int64_t step_count(double duration, double dt) {
  const double ratio = duration / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio)) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::ceil(ratio));
}

int TrajectoryLog::robot_count() const {
  if (metadata) return metadata->options.count;
  int max_id = -1;
  for (const TrajectoryRecord& r : records) max_id = std::max(max_id, r.robot_id);
  return max_id + 1;
}

std::size_t TrajectoryLog::sample_count() const {
  const int n = robot_count();
  return n > 0 ? records.size() / static_cast<std::size_t>(n) : 0;
}

std::vector<TrajectoryRecord> TrajectoryLog::robot_records(int robot_id) const {
  std::vector<TrajectoryRecord> out;
  for (const TrajectoryRecord& r : records) {
    if (r.robot_id == robot_id) out.push_back(r);
  }
  return out;
}

TrajectoryLog run(const BehaviorSpec& spec, const RunOptions& options) {
  spec.validate();
  validate_count(options.count);
  if (!(options.duration > 0.0) || !std::isfinite(options.duration)) {
    throw Error(ErrorCode::InvalidArgument, "duration must be positive");
  }
  if (!(options.dt > 0.0) || options.dt > kMaxTimestep) {
    throw Error(ErrorCode::BadTimestep, "time step must lie in (0, 0.1] s");
  }

  TrajectoryLog log;
  log.metadata = RunMetadata{spec, options};
  const std::int64_t steps = step_count(options.duration, options.dt);
  log.records.reserve(static_cast<std::size_t>(steps + 1) * options.count);

  SwarmState state = init_behavior(spec, options.count, options.seed);
  for (std::int64_t k = 0; k <= steps; ++k) {
    const std::vector<UniControl> commands = compute_commands(state, spec);
    for (std::size_t i = 0; i < state.size(); ++i) {
      const Pose& p = state.poses[i];
      log.records.push_back(
          {state.t, static_cast<int>(i), p.x, p.y, p.theta, commands[i].v, commands[i].omega});
    }
    if (k < steps) state = advance(state, spec, commands, options.dt, static_cast<double>(k + 1) * options.dt);
  }
  return log;
}

}  // namespace emoswarm
