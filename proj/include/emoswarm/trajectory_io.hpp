#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "emoswarm/engine.hpp"

namespace emoswarm {

enum class LogFormat { Csv, Jsonl };

/// Throws Config for names other than csv and jsonl.
LogFormat parse_log_format(std::string_view name);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

std::string metadata_to_json(const RunMetadata& metadata);
/// Throws MalformedLog when the text is not a complete metadata object.
RunMetadata metadata_from_json(std::string_view text);

/// CSV: an optional `# meta {json}` line, the header
/// `t,robot_id,x,y,theta,v,omega`, then one row per record.
/// JSONL: an optional `{"type":"metadata",...}` line, then one object per record.
void write_log(std::ostream& out, const TrajectoryLog& log, LogFormat format);
void write_log(const std::filesystem::path& path, const TrajectoryLog& log, LogFormat format);

/// Detects the format from content. Throws MalformedLog naming the 1-based line.
TrajectoryLog read_log(std::istream& in);
TrajectoryLog read_log(const std::filesystem::path& path);

}  // namespace emoswarm
