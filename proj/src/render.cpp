#include "emoswarm/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include "emoswarm/dynamics.hpp"

namespace emoswarm {
namespace {

constexpr double kPixelsPerMeter = 200.0;
constexpr int kTrailFadeSteps = 8;
constexpr std::array<const char*, 6> kTrailColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                                     "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Domain bounding_domain(const TrajectoryLog& log) {
  Domain d{0.0, 1.0, 0.0, 1.0};
  if (log.records.empty()) return d;
  d = {log.records.front().x, log.records.front().x, log.records.front().y, log.records.front().y};
  for (const TrajectoryRecord& r : log.records) {
    d.x_min = std::min(d.x_min, r.x);
    d.x_max = std::max(d.x_max, r.x);
    d.y_min = std::min(d.y_min, r.y);
    d.y_max = std::max(d.y_max, r.y);
  }
  const double pad = 2.0 * kRobotRadius;
  return {d.x_min - pad, d.x_max + pad, d.y_min - pad, d.y_max + pad};
}

}  // namespace

FrameData frame_data(const TrajectoryLog& log, std::size_t sample, int trail_robots) {
  const int n = log.robot_count();
  if (n <= 0 || log.records.size() % static_cast<std::size_t>(n) != 0) {
    throw Error(ErrorCode::MalformedLog, "log does not hold one record per robot per sample");
  }
  const std::size_t samples = log.records.size() / n;
  if (sample >= samples) {
    throw Error(ErrorCode::InvalidArgument, "sample " + std::to_string(sample) + " beyond end of log");
  }

  FrameData frame;
  frame.sample = sample;
  frame.domain = log.metadata ? log.metadata->spec.domain : bounding_domain(log);
  const std::size_t base = sample * n;
  frame.t = log.records[base].t;
  for (int i = 0; i < n; ++i) {
    const TrajectoryRecord& r = log.records[base + i];
    frame.robots.push_back({r.robot_id, Pose{r.x, r.y, r.theta}});
  }
  const int trails = std::clamp(trail_robots, 0, n);
  for (int i = 0; i < trails; ++i) {
    Trail trail;
    trail.robot_id = i;
    trail.points.reserve(sample + 1);
    for (std::size_t s = 0; s <= sample; ++s) {
      const TrajectoryRecord& r = log.records[s * n + i];
      trail.points.push_back({r.x, r.y});
    }
    frame.trails.push_back(std::move(trail));
  }
  return frame;
}

std::string render_svg(const FrameData& frame) {
  const Domain& d = frame.domain;
  const double w = d.width() * kPixelsPerMeter;
  const double h = d.height() * kPixelsPerMeter;
  auto px = [&](double x) { return (x - d.x_min) * kPixelsPerMeter; };
  auto py = [&](double y) { return (d.y_max - y) * kPixelsPerMeter; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" fill=\"#fafafa\" stroke=\"#333333\" stroke-width=\"2\"/>\n";

  for (const Trail& trail : frame.trails) {
    const char* color = kTrailColors[static_cast<std::size_t>(trail.robot_id) % kTrailColors.size()];
    const std::size_t count = trail.points.size();
    if (count < 2) continue;
    // Older chunks are drawn fainter.
    for (int chunk = 0; chunk < kTrailFadeSteps; ++chunk) {
      const std::size_t lo = (count - 1) * chunk / kTrailFadeSteps;
      const std::size_t hi = (count - 1) * (chunk + 1) / kTrailFadeSteps;
      if (hi <= lo) continue;
      const double opacity = 0.15 + 0.85 * (chunk + 1) / kTrailFadeSteps;
      svg += "  <polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" opacity=\"" +
             num(opacity) + "\" points=\"";
      for (std::size_t k = lo; k <= hi; ++k) {
        svg += num(px(trail.points[k].x)) + "," + num(py(trail.points[k].y)) + " ";
      }
      svg += "\"/>\n";
    }
  }

  const double half = kRobotRadius * kPixelsPerMeter;
  for (const RobotGlyph& robot : frame.robots) {
    const double cx = px(robot.pose.x);
    const double cy = py(robot.pose.y);
    const double deg = -robot.pose.theta * 180.0 / std::numbers::pi;
    svg += "  <g transform=\"translate(" + num(cx) + "," + num(cy) + ") rotate(" + num(deg) + ")\">\n";
    svg += "    <rect x=\"" + num(-half) + "\" y=\"" + num(-half) + "\" width=\"" + num(2 * half) +
           "\" height=\"" + num(2 * half) + "\" fill=\"#444444\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "    <line x1=\"0\" y1=\"0\" x2=\"" + num(half) + "\" y2=\"0\" stroke=\"#ffffff\" stroke-width=\"2\"/>\n";
    svg += "  </g>\n";
  }
  svg += "  <text x=\"8\" y=\"20\" font-family=\"monospace\" font-size=\"16\">t = " + num(frame.t) +
         " s</text>\n";
  svg += "</svg>\n";
  return svg;
}

int render_frames(const TrajectoryLog& log, const std::filesystem::path& frames_dir, int stride,
                  int trail_robots) {
  if (stride < 1) throw Error(ErrorCode::InvalidArgument, "frame stride must be at least 1");
  std::error_code ec;
  std::filesystem::create_directories(frames_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + frames_dir.string() + ": " + ec.message());

  const int n = log.robot_count();
  const std::size_t samples = n > 0 ? log.records.size() / n : 0;
  int written = 0;
  for (std::size_t s = 0; s < samples; s += stride) {
    const std::string svg = render_svg(frame_data(log, s, trail_robots));
    char name[32];
    std::snprintf(name, sizeof name, "frame_%05zu.svg", s);
    const std::filesystem::path path = frames_dir / name;
    std::ofstream out(path, std::ios::binary);
    out << svg;
    if (!out) throw Error(ErrorCode::Io, "failed writing " + path.string());
    ++written;
  }
  return written;
}

}  // namespace emoswarm
