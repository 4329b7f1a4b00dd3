// Command-line front end over the emoswarm C API.
//
//   emoswarm run --emotion anger --n 12 --domain 4.3x3.6 --out anger.csv
//   emoswarm render --log anger.csv --frames-dir frames --frame-stride 50
//   emoswarm metrics --log anger.csv [--json]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emoswarm/emoswarm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::string emotion;
  int count = 15;
  std::string domain = "3.2x2.0";
  std::optional<double> duration;
  double dt = 0.01;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  bool render = false;
  std::string frames_dir = "frames";
  int frame_stride = 10;
  int trails = 5;
  std::vector<std::string> overrides;
  bool metrics = false;
  bool metrics_json = false;
};

struct LogArgs {
  std::string log_path;
  std::string frames_dir = "frames";
  int frame_stride = 10;
  int trails = 5;
  bool json = false;
};

int config_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return kExitConfig;
}

int report(es_status status, const char* what) {
  std::fprintf(stderr, "error: %s: %s (%s)\n", what, es_last_error(), es_status_name(status));
  return status == ES_ERR_CONFIG ? kExitConfig : kExitRuntime;
}

bool parse_domain(const std::string& text, double& width, double& height) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) return false;
  try {
    std::size_t used = 0;
    width = std::stod(text.substr(0, x), &used);
    if (used != x) return false;
    const std::string rest = text.substr(x + 1);
    height = std::stod(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return width > 0.0 && height > 0.0;
}

class Spec {
 public:
  ~Spec() { es_spec_destroy(handle_); }
  es_spec** out() { return &handle_; }
  es_spec* get() const { return handle_; }

 private:
  es_spec* handle_ = nullptr;
};

class Log {
 public:
  ~Log() { es_log_destroy(handle_); }
  es_log** out() { return &handle_; }
  es_log* get() const { return handle_; }

 private:
  es_log* handle_ = nullptr;
};

int print_metrics(const es_log* log, bool json) {
  char* text = nullptr;
  const es_status status = es_metrics_report(log, json ? ES_REPORT_JSON : ES_REPORT_TEXT, &text);
  if (status != ES_OK) return report(status, "metrics");
  std::fputs(text, stdout);
  es_string_free(text);
  return kExitOk;
}

int render(const es_log* log, const std::string& dir, int stride, int trails) {
  int frames = 0;
  const es_status status = es_render_frames(log, dir.c_str(), stride, trails, &frames);
  if (status != ES_OK) return report(status, "render");
  std::printf("rendered %d frames to %s\n", frames, dir.c_str());
  return kExitOk;
}

int cmd_run(const RunConfig& cfg) {
  double width = 0.0;
  double height = 0.0;
  if (!parse_domain(cfg.domain, width, height)) {
    return config_error("domain: expected WxH with positive sizes, got '" + cfg.domain + "'");
  }
  if (cfg.count < 1) return config_error("n: must be at least 1");
  if (!(cfg.dt > 0.0) || cfg.dt > 0.1) return config_error("dt: must lie in (0, 0.1]");
  if (cfg.format != "csv" && cfg.format != "jsonl") {
    return config_error("format: expected csv or jsonl, got '" + cfg.format + "'");
  }
  if (cfg.frame_stride < 1) return config_error("frame-stride: must be at least 1");

  Spec spec;
  if (const es_status s = es_spec_create(cfg.emotion.c_str(), width, height, spec.out()); s != ES_OK) {
    return report(s, "emotion");
  }
  for (const std::string& kv : cfg.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) return config_error("set: expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (const es_status s = es_spec_set(spec.get(), key.c_str(), value.c_str()); s != ES_OK) {
      return report(s, "set");
    }
  }

  const double duration = cfg.duration.value_or(es_default_duration(cfg.emotion.c_str()));
  if (!(duration > 0.0)) return config_error("duration: must be positive");

  const std::string out = cfg.out.empty() ? cfg.emotion + "." + cfg.format : cfg.out;
  const std::filesystem::path parent = std::filesystem::path(out).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent)) {
    return config_error("out: directory '" + parent.string() + "' does not exist");
  }

  Log log;
  const auto start = std::chrono::steady_clock::now();
  if (const es_status s = es_run(spec.get(), cfg.count, duration, cfg.dt, cfg.seed, log.out()); s != ES_OK) {
    return report(s, "run");
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const es_format format = cfg.format == "jsonl" ? ES_FORMAT_JSONL : ES_FORMAT_CSV;
  if (const es_status s = es_log_write(log.get(), out.c_str(), format); s != ES_OK) return report(s, "write");

  const std::size_t samples = es_log_sample_count(log.get());
  std::printf("emotion=%s n=%d steps=%zu records=%zu wall=%.3fs out=%s\n", cfg.emotion.c_str(), cfg.count,
              samples > 0 ? samples - 1 : 0, es_log_record_count(log.get()), wall, out.c_str());

  if (cfg.render) {
    if (const int rc = render(log.get(), cfg.frames_dir, cfg.frame_stride, cfg.trails); rc != kExitOk) return rc;
  }
  if (cfg.metrics) return print_metrics(log.get(), cfg.metrics_json);
  return kExitOk;
}

int load(const std::string& path, Log& log) {
  if (const es_status s = es_log_read(path.c_str(), log.out()); s != ES_OK) return report(s, "read");
  return kExitOk;
}

int cmd_render(const LogArgs& args) {
  if (args.frame_stride < 1) return config_error("frame-stride: must be at least 1");
  Log log;
  if (const int rc = load(args.log_path, log); rc != kExitOk) return rc;
  return render(log.get(), args.frames_dir, args.frame_stride, args.trails);
}

int cmd_metrics(const LogArgs& args) {
  Log log;
  if (const int rc = load(args.log_path, log); rc != kExitOk) return rc;
  return print_metrics(log.get(), args.json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emotion-expressive swarm behaviors: simulate, export, render, measure"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* run = app.add_subcommand("run", "Simulate one behavior and write its trajectory log");
  run->add_option("--emotion", cfg.emotion, std::string("One of: ") + es_emotion_names())->required();
  run->add_option("--n", cfg.count, "Number of robots")->capture_default_str();
  run->add_option("--domain", cfg.domain, "Domain size WxH in meters")->capture_default_str();
  run->add_option("--duration", cfg.duration, "Simulated seconds (default depends on emotion)");
  run->add_option("--dt", cfg.dt, "Time step in seconds")->capture_default_str();
  run->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  run->add_option("--out", cfg.out, "Trajectory log path (default <emotion>.<format>)");
  run->add_option("--format", cfg.format, "csv or jsonl")->capture_default_str();
  run->add_flag("--render", cfg.render, "Render SVG frames after the run");
  run->add_option("--frames-dir", cfg.frames_dir, "Frame output directory")->capture_default_str();
  run->add_option("--frame-stride", cfg.frame_stride, "Samples between frames")->capture_default_str();
  run->add_option("--trails", cfg.trails, "Robots drawn with trails")->capture_default_str();
  run->add_option("--set", cfg.overrides, "Parameter override key=value (repeatable)");
  run->add_flag("--metrics", cfg.metrics, "Print the metrics report after the run");
  run->add_flag("--json", cfg.metrics_json, "Metrics report as JSON");

  LogArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "Render SVG frames from a trajectory log");
  render_cmd->add_option("--log", render_args.log_path, "Trajectory log")->required();
  render_cmd->add_option("--frames-dir", render_args.frames_dir, "Output directory")->capture_default_str();
  render_cmd->add_option("--frame-stride", render_args.frame_stride, "Samples between frames")
      ->capture_default_str();
  render_cmd->add_option("--trails", render_args.trails, "Robots drawn with trails")->capture_default_str();

  LogArgs metrics_args;
  auto* metrics_cmd = app.add_subcommand("metrics", "Per-robot and swarm motion statistics of a log");
  metrics_cmd->add_option("--log", metrics_args.log_path, "Trajectory log")->required();
  metrics_cmd->add_flag("--json", metrics_args.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  if (run->parsed()) return cmd_run(cfg);
  if (render_cmd->parsed()) return cmd_render(render_args);
  return cmd_metrics(metrics_args);
}
