#include "emoswarm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace emoswarm {

double trace_angularity(std::span<const TrajectoryRecord> records) {
  if (records.size() < 3) throw Error(ErrorCode::TooShort, "angularity needs at least 3 records");
  std::vector<Vec2> segments;
  segments.reserve(records.size());
  for (std::size_t k = 1; k < records.size(); ++k) {
    const Vec2 d{records[k].x - records[k - 1].x, records[k].y - records[k - 1].y};
    if (norm(d) > kMinSegmentLength) segments.push_back(d);
  }
  if (segments.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t k = 1; k < segments.size(); ++k) {
    total += std::abs(std::atan2(cross(segments[k - 1], segments[k]), dot(segments[k - 1], segments[k])));
  }
  return total / static_cast<double>(segments.size() - 1);
}

double trace_angularity(const TrajectoryLog& log, int robot_id) {
  return trace_angularity(log.robot_records(robot_id));
}

TraceStats trace_stats(std::span<const TrajectoryRecord> records) {
  if (records.size() < 2) throw Error(ErrorCode::TooShort, "trace statistics need at least 2 records");
  TraceStats s;
  for (std::size_t k = 1; k < records.size(); ++k) {
    s.path_length += std::hypot(records[k].x - records[k - 1].x, records[k].y - records[k - 1].y);
  }
  s.net_displacement =
      std::hypot(records.back().x - records.front().x, records.back().y - records.front().y);
  const double elapsed = records.back().t - records.front().t;
  s.mean_speed = elapsed > 0.0 ? s.path_length / elapsed : 0.0;
  for (const TrajectoryRecord& r : records) s.peak_speed = std::max(s.peak_speed, std::abs(r.v));
  return s;
}

TraceStats trace_stats(const TrajectoryLog& log, int robot_id) { return trace_stats(log.robot_records(robot_id)); }

std::vector<MetricsRow> metrics_table(const TrajectoryLog& log) {
  const int n = log.robot_count();
  std::vector<MetricsRow> rows;
  rows.reserve(n + 1);
  MetricsRow aggregate;
  for (int id = 0; id < n; ++id) {
    const std::vector<TrajectoryRecord> records = log.robot_records(id);
    MetricsRow row;
    row.robot_id = id;
    row.stats = trace_stats(records);
    row.angularity = records.size() >= 3 ? trace_angularity(records) : 0.0;
    aggregate.stats.path_length += row.stats.path_length;
    aggregate.stats.net_displacement += row.stats.net_displacement;
    aggregate.stats.mean_speed += row.stats.mean_speed;
    aggregate.stats.peak_speed = std::max(aggregate.stats.peak_speed, row.stats.peak_speed);
    aggregate.angularity += row.angularity;
    rows.push_back(row);
  }
  if (n > 0) {
    aggregate.stats.path_length /= n;
    aggregate.stats.net_displacement /= n;
    aggregate.stats.mean_speed /= n;
    aggregate.angularity /= n;
  }
  rows.push_back(aggregate);
  return rows;
}

std::string format_metrics_text(const std::vector<MetricsRow>& rows) {
  std::string out = "robot   path_length  net_displacement  mean_speed  peak_speed  angularity\n";
  char line[160];
  for (const MetricsRow& r : rows) {
    const std::string id = r.robot_id < 0 ? "all" : std::to_string(r.robot_id);
    std::snprintf(line, sizeof line, "%-6s %12.6f %17.6f %11.6f %11.6f %11.6f\n", id.c_str(),
                  r.stats.path_length, r.stats.net_displacement, r.stats.mean_speed, r.stats.peak_speed,
                  r.angularity);
    out += line;
  }
  return out;
}

std::string format_metrics_json(const std::vector<MetricsRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const MetricsRow& r : rows) {
    nlohmann::json row;
    if (r.robot_id < 0) {
      row["robot"] = "all";
    } else {
      row["robot"] = r.robot_id;
    }
    row["path_length"] = r.stats.path_length;
    row["net_displacement"] = r.stats.net_displacement;
    row["mean_speed"] = r.stats.mean_speed;
    row["peak_speed"] = r.stats.peak_speed;
    row["angularity"] = r.angularity;
    doc.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", std::move(doc)}}.dump(2) + "\n";
}

}  // namespace emoswarm
