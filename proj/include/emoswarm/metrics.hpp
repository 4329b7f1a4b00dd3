#pragma once

#include <string>
#include <vector>

#include "emoswarm/engine.hpp"

namespace emoswarm {

/// Segments shorter than this are ignored when measuring turning.
inline constexpr double kMinSegmentLength = 1e-4;

struct TraceStats {
  double path_length = 0.0;
  double net_displacement = 0.0;
  double mean_speed = 0.0;
  double peak_speed = 0.0;
};

/// Mean absolute turning angle (rad) between consecutive displacement
/// segments longer than kMinSegmentLength. Throws TooShort under 3 records.
double trace_angularity(std::span<const TrajectoryRecord> records);
double trace_angularity(const TrajectoryLog& log, int robot_id);

/// Path statistics from logged positions; peak speed from logged |v|.
/// Throws TooShort under 2 records.
TraceStats trace_stats(std::span<const TrajectoryRecord> records);
TraceStats trace_stats(const TrajectoryLog& log, int robot_id);

struct MetricsRow {
  /// Robot index, or -1 for the swarm aggregate.
  int robot_id = -1;
  TraceStats stats;
  double angularity = 0.0;
};

/// One row per robot followed by the aggregate row: means over robots, except
/// peak_speed which is the maximum.
std::vector<MetricsRow> metrics_table(const TrajectoryLog& log);

std::string format_metrics_text(const std::vector<MetricsRow>& rows);
std::string format_metrics_json(const std::vector<MetricsRow>& rows);

}  // namespace emoswarm
