#include "emoswarm/trajectory_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace emoswarm {
namespace {

using nlohmann::json;

constexpr std::string_view kCsvHeader = "t,robot_id,x,y,theta,v,omega";
constexpr std::string_view kCsvMetaPrefix = "# meta ";
constexpr int kFormatVersion = 1;

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::MalformedLog, "line " + std::to_string(line) + ": " + why);
}

json domain_to_json(const Domain& d) {
  return {{"x_min", d.x_min}, {"x_max", d.x_max}, {"y_min", d.y_min}, {"y_max", d.y_max}};
}

Domain domain_from_json(const json& j) {
  return {j.at("x_min").get<double>(), j.at("x_max").get<double>(), j.at("y_min").get<double>(),
          j.at("y_max").get<double>()};
}

ContourKind contour_kind_from(std::string_view name) {
  if (name == "happiness") return ContourKind::Happiness;
  if (name == "surprise") return ContourKind::Surprise;
  if (name == "sadness") return ContourKind::Sadness;
  throw Error(ErrorCode::MalformedLog, "unknown contour kind '" + std::string(name) + "'");
}

json metadata_object(const RunMetadata& m) {
  const BehaviorSpec& s = m.spec;
  json j;
  j["type"] = "metadata";
  j["format_version"] = kFormatVersion;
  j["emotion"] = std::string(to_string(s.emotion));
  j["count"] = m.options.count;
  j["duration"] = m.options.duration;
  j["dt"] = m.options.dt;
  j["seed"] = m.options.seed;
  j["domain"] = domain_to_json(s.domain);
  j["diffeo"] = {{"lookahead", s.diffeo.lookahead}, {"gain", s.diffeo.gain}};
  j["kappa"] = s.kappa;
  j["limits"] = {{"enabled", s.limits.enabled}, {"v_max", s.limits.v_max}, {"omega_max", s.limits.omega_max}};
  j["quadrature_resolution"] = s.quadrature_resolution;
  if (s.contour) {
    const ContourParams& c = *s.contour;
    j["contour"] = {{"kind", std::string(to_string(c.kind))},
                    {"center", {c.center.x, c.center.y}},
                    {"radius", c.radius},
                    {"amplitude", c.amplitude},
                    {"frequency", c.frequency},
                    {"radius_min", c.radius_min},
                    {"radius_max", c.radius_max},
                    {"expansion_rate", c.expansion_rate},
                    {"phase_rate", c.phase_rate}};
  } else {
    j["contour"] = nullptr;
  }
  if (s.density) {
    const DensityField& d = *s.density;
    j["density"] = {{"kind", std::string(to_string(d.kind))},
                    {"sigma", d.sigma},
                    {"margin", d.margin},
                    {"floor", d.floor}};
  } else {
    j["density"] = nullptr;
  }
  return j;
}

RunMetadata metadata_from_object(const json& j) {
  RunMetadata m;
  BehaviorSpec& s = m.spec;
  s.emotion = parse_emotion(j.at("emotion").get<std::string>());
  m.options.count = j.at("count").get<int>();
  m.options.duration = j.at("duration").get<double>();
  m.options.dt = j.at("dt").get<double>();
  m.options.seed = j.at("seed").get<std::uint64_t>();
  s.domain = domain_from_json(j.at("domain"));
  s.diffeo.lookahead = j.at("diffeo").at("lookahead").get<double>();
  s.diffeo.gain = j.at("diffeo").at("gain").get<double>();
  s.kappa = j.at("kappa").get<double>();
  s.limits.enabled = j.at("limits").at("enabled").get<bool>();
  s.limits.v_max = j.at("limits").at("v_max").get<double>();
  s.limits.omega_max = j.at("limits").at("omega_max").get<double>();
  s.quadrature_resolution = j.at("quadrature_resolution").get<int>();
  if (const json& c = j.at("contour"); !c.is_null()) {
    ContourParams p;
    p.kind = contour_kind_from(c.at("kind").get<std::string>());
    p.center = {c.at("center").at(0).get<double>(), c.at("center").at(1).get<double>()};
    p.radius = c.at("radius").get<double>();
    p.amplitude = c.at("amplitude").get<double>();
    p.frequency = c.at("frequency").get<int>();
    p.radius_min = c.at("radius_min").get<double>();
    p.radius_max = c.at("radius_max").get<double>();
    p.expansion_rate = c.at("expansion_rate").get<double>();
    p.phase_rate = c.at("phase_rate").get<double>();
    s.contour = p;
  }
  if (const json& d = j.at("density"); !d.is_null()) {
    DensityField f;
    f.kind = parse_density_kind(d.at("kind").get<std::string>());
    f.domain = s.domain;
    f.sigma = d.at("sigma").get<double>();
    f.margin = d.at("margin").get<double>();
    f.floor = d.at("floor").get<double>();
    s.density = f;
  }
  return m;
}

template <typename T>
T parse_field(std::string_view text, std::size_t line, std::string_view name) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    malformed(line, "bad " + std::string(name) + " value '" + std::string(text) + "'");
  }
  return value;
}

TrajectoryRecord parse_csv_row(std::string_view row, std::size_t line) {
  std::array<std::string_view, 7> fields;
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = row.find(',', start);
    if (count == fields.size()) malformed(line, "expected 7 fields");
    fields[count++] = row.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (count != fields.size()) malformed(line, "expected 7 fields, found " + std::to_string(count));
  return {parse_field<double>(fields[0], line, "t"),     parse_field<int>(fields[1], line, "robot_id"),
          parse_field<double>(fields[2], line, "x"),     parse_field<double>(fields[3], line, "y"),
          parse_field<double>(fields[4], line, "theta"), parse_field<double>(fields[5], line, "v"),
          parse_field<double>(fields[6], line, "omega")};
}

TrajectoryRecord parse_json_record(const json& j, std::size_t line) {
  try {
    return {j.at("t").get<double>(),     j.at("robot_id").get<int>(), j.at("x").get<double>(),
            j.at("y").get<double>(),     j.at("theta").get<double>(), j.at("v").get<double>(),
            j.at("omega").get<double>()};
  } catch (const json::exception& e) {
    malformed(line, e.what());
  }
}

void check_order(const TrajectoryLog& log, std::size_t line) {
  const std::size_t n = log.records.size();
  if (n < 2) return;
  const TrajectoryRecord& a = log.records[n - 2];
  const TrajectoryRecord& b = log.records[n - 1];
  if (b.t < a.t || (b.t == a.t && b.robot_id <= a.robot_id)) {
    malformed(line, "records are not sorted by (t, robot_id)");
  }
}

void check_robot_id(const TrajectoryLog& log, std::size_t line) {
  const int id = log.records.back().robot_id;
  if (id < 0 || (log.metadata && id >= log.metadata->options.count)) {
    malformed(line, "robot_id " + std::to_string(id) + " out of range");
  }
}

}  // namespace

LogFormat parse_log_format(std::string_view name) {
  if (name == "csv") return LogFormat::Csv;
  if (name == "jsonl") return LogFormat::Jsonl;
  throw Error(ErrorCode::Config, "format: unknown format '" + std::string(name) + "' (valid: csv, jsonl)");
}

std::string format_real(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string metadata_to_json(const RunMetadata& metadata) { return metadata_object(metadata).dump(); }

RunMetadata metadata_from_json(std::string_view text) {
  try {
    return metadata_from_object(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedLog, std::string("metadata: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedLog, std::string("metadata: ") + e.what());
  }
}

void write_log(std::ostream& out, const TrajectoryLog& log, LogFormat format) {
  std::string line;
  if (format == LogFormat::Csv) {
    if (log.metadata) out << kCsvMetaPrefix << metadata_to_json(*log.metadata) << '\n';
    out << kCsvHeader << '\n';
    for (const TrajectoryRecord& r : log.records) {
      line.clear();
      line += format_real(r.t);
      line += ',';
      line += std::to_string(r.robot_id);
      for (double v : {r.x, r.y, r.theta, r.v, r.omega}) {
        line += ',';
        line += format_real(v);
      }
      line += '\n';
      out << line;
    }
    return;
  }
  if (log.metadata) out << metadata_to_json(*log.metadata) << '\n';
  for (const TrajectoryRecord& r : log.records) {
    line = "{\"t\":" + format_real(r.t) + ",\"robot_id\":" + std::to_string(r.robot_id) +
           ",\"x\":" + format_real(r.x) + ",\"y\":" + format_real(r.y) + ",\"theta\":" + format_real(r.theta) +
           ",\"v\":" + format_real(r.v) + ",\"omega\":" + format_real(r.omega) + "}\n";
    out << line;
  }
}

void write_log(const std::filesystem::path& path, const TrajectoryLog& log, LogFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  write_log(out, log, format);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path.string());
}

TrajectoryLog read_log(std::istream& in) {
  TrajectoryLog log;
  std::string line;
  std::size_t line_no = 0;
  enum class Mode { Unknown, Csv, Jsonl } mode = Mode::Unknown;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string_view text = line;

    if (mode == Mode::Unknown) mode = text.front() == '{' ? Mode::Jsonl : Mode::Csv;

    if (mode == Mode::Csv) {
      if (text.starts_with(kCsvMetaPrefix)) {
        if (header_seen || log.metadata) malformed(line_no, "unexpected metadata line");
        try {
          log.metadata = metadata_from_json(text.substr(kCsvMetaPrefix.size()));
        } catch (const Error& e) {
          malformed(line_no, e.what());
        }
        continue;
      }
      if (text.front() == '#') continue;
      if (!header_seen) {
        if (text != kCsvHeader) malformed(line_no, "expected header '" + std::string(kCsvHeader) + "'");
        header_seen = true;
        continue;
      }
      log.records.push_back(parse_csv_row(text, line_no));
    } else {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        malformed(line_no, e.what());
      }
      if (j.is_object() && j.contains("type") && j["type"] == "metadata") {
        if (log.metadata || !log.records.empty()) malformed(line_no, "unexpected metadata line");
        try {
          log.metadata = metadata_from_object(j);
        } catch (const std::exception& e) {
          malformed(line_no, std::string("metadata: ") + e.what());
        }
        continue;
      }
      log.records.push_back(parse_json_record(j, line_no));
    }
    check_robot_id(log, line_no);
    check_order(log, line_no);
  }
  if (mode == Mode::Csv && !header_seen) malformed(line_no, "missing header");
  if (mode == Mode::Unknown) malformed(line_no, "empty log");
  return log;
}

TrajectoryLog read_log(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return read_log(in);
}

}  // namespace emoswarm
