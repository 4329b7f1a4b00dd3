#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "emoswarm/engine.hpp"

namespace emoswarm {

inline constexpr int kDefaultTrailRobots = 5;

struct RobotGlyph {
  int robot_id = 0;
  Pose pose;
};

struct Trail {
  int robot_id = 0;
  /// Positions from the first sample up to the frame, oldest first.
  std::vector<Vec2> points;
};

/// What one frame shows at a given sample.
struct FrameData {
  std::size_t sample = 0;
  double t = 0.0;
  Domain domain;
  std::vector<RobotGlyph> robots;
  std::vector<Trail> trails;
};

/// Uses the log's domain, or the bounding box of all positions when the log
/// carries no metadata. Trails are drawn for robots 0 .. trail_robots-1.
FrameData frame_data(const TrajectoryLog& log, std::size_t sample, int trail_robots);

std::string render_svg(const FrameData& frame);

/// Writes frame_NNNNN.svg for every sample index divisible by `stride`.
/// Returns the number of files written.
int render_frames(const TrajectoryLog& log, const std::filesystem::path& frames_dir, int stride,
                  int trail_robots = kDefaultTrailRobots);

}  // namespace emoswarm
