#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "emoswarm/behavior.hpp"
#include "emoswarm/controllers.hpp"
#include "emoswarm/types.hpp"

namespace emoswarm {

inline constexpr int kMaxPlacementAttempts = 100000;

struct SwarmState {
  std::int64_t step_index = 0;
  double t = 0.0;
  std::vector<Pose> poses;
  /// Initial phase of each robot's tracked point; empty for coverage behaviors.
  std::vector<double> initial_phases;
  /// Current wrapped phases; empty for coverage behaviors.
  std::vector<double> phases;
  std::mt19937_64 rng;

  std::size_t size() const { return poses.size(); }
};

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64& rng);

/// Contour emotions start on the contour, heading along it; coverage emotions
/// start at seeded random positions at least two robot radii apart.
/// Throws PlacementFailure when rejection sampling gives up.
SwarmState init_behavior(const BehaviorSpec& spec, int count, std::uint64_t seed);

/// Where each robot is being driven at the state's time.
std::vector<Vec2> compute_targets(const SwarmState& state, const BehaviorSpec& spec);

/// Saturated unicycle commands every robot would apply from `state`.
std::vector<UniControl> compute_commands(const SwarmState& state, const BehaviorSpec& spec);

/// One synchronous update: every command is computed from the pre-step state.
SwarmState step(const SwarmState& state, const BehaviorSpec& spec, double dt);

struct TrajectoryRecord {
  double t = 0.0;
  int robot_id = 0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  double omega = 0.0;
  friend bool operator==(const TrajectoryRecord&, const TrajectoryRecord&) = default;
};

struct RunOptions {
  int count = 15;
  double duration = 1.0;
  double dt = 0.01;
  std::uint64_t seed = 0;
};

struct RunMetadata {
  BehaviorSpec spec;
  RunOptions options;
};

/// Records sorted by (t, robot_id), one per robot per sample.
struct TrajectoryLog {
  std::optional<RunMetadata> metadata;
  std::vector<TrajectoryRecord> records;

  int robot_count() const;
  /// Number of time samples (records / robots).
  std::size_t sample_count() const;
  /// Records of one robot in time order.
  std::vector<TrajectoryRecord> robot_records(int robot_id) const;
};

/// ceil(duration / dt), ignoring round-off just above an integer.
std::int64_t step_count(double duration, double dt);

/// Initializes, then logs every robot at t = 0 and after each of the
/// step_count(duration, dt) steps. The command stored with a record is the
/// one computed from that record's pose.
TrajectoryLog run(const BehaviorSpec& spec, const RunOptions& options);

}  // namespace emoswarm
