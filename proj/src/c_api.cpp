#include "emoswarm/emoswarm.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "emoswarm/behavior.hpp"
#include "emoswarm/engine.hpp"
#include "emoswarm/metrics.hpp"
#include "emoswarm/render.hpp"
#include "emoswarm/trajectory_io.hpp"

struct es_spec {
  emoswarm::BehaviorSpec spec;
};

struct es_log {
  emoswarm::TrajectoryLog log;
};

namespace {

thread_local std::string last_error;

es_status to_status(emoswarm::ErrorCode code) {
  using emoswarm::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return ES_ERR_INVALID_ARGUMENT;
    case ErrorCode::DuplicatePosition: return ES_ERR_DUPLICATE_POSITION;
    case ErrorCode::OutOfDomain: return ES_ERR_OUT_OF_DOMAIN;
    case ErrorCode::ZeroMass: return ES_ERR_ZERO_MASS;
    case ErrorCode::NonpositiveSigma: return ES_ERR_NONPOSITIVE_SIGMA;
    case ErrorCode::BadMargin: return ES_ERR_BAD_MARGIN;
    case ErrorCode::WrongKind: return ES_ERR_WRONG_KIND;
    case ErrorCode::BadTimestep: return ES_ERR_BAD_TIMESTEP;
    case ErrorCode::PlacementFailure: return ES_ERR_PLACEMENT_FAILURE;
    case ErrorCode::TooShort: return ES_ERR_TOO_SHORT;
    case ErrorCode::MalformedLog: return ES_ERR_MALFORMED_LOG;
    case ErrorCode::Config: return ES_ERR_CONFIG;
    case ErrorCode::Io: return ES_ERR_IO;
  }
  return ES_ERR_INTERNAL;
}

es_status fail(es_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
es_status guarded(F&& body) {
  try {
    body();
    return ES_OK;
  } catch (const emoswarm::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ES_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ES_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ES_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* es_version(void) { return "1.0.0"; }

const char* es_status_name(es_status status) {
  switch (status) {
    case ES_OK: return "ok";
    case ES_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ES_ERR_CONFIG: return "configuration error";
    case ES_ERR_DUPLICATE_POSITION: return "duplicate position";
    case ES_ERR_OUT_OF_DOMAIN: return "position outside domain";
    case ES_ERR_ZERO_MASS: return "zero mass";
    case ES_ERR_NONPOSITIVE_SIGMA: return "nonpositive sigma";
    case ES_ERR_BAD_MARGIN: return "bad margin";
    case ES_ERR_WRONG_KIND: return "wrong contour kind";
    case ES_ERR_BAD_TIMESTEP: return "bad time step";
    case ES_ERR_PLACEMENT_FAILURE: return "placement failure";
    case ES_ERR_TOO_SHORT: return "trace too short";
    case ES_ERR_MALFORMED_LOG: return "malformed log";
    case ES_ERR_IO: return "i/o error";
    case ES_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* es_last_error(void) { return last_error.c_str(); }

void es_string_free(char* text) { std::free(text); }

const char* es_emotion_names(void) {
  static const std::string names = emoswarm::emotion_names();
  return names.c_str();
}

double es_default_duration(const char* emotion) {
  if (emotion == nullptr) return -1.0;
  try {
    return emoswarm::default_duration(emoswarm::parse_emotion(emotion));
  } catch (...) {
    return -1.0;
  }
}

es_status es_spec_create(const char* emotion, double width, double height, es_spec** out) {
  if (out == nullptr || emotion == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const emoswarm::Emotion e = emoswarm::parse_emotion(emotion);
    emoswarm::Domain domain;
    try {
      domain = emoswarm::Domain::from_size(width, height);
    } catch (const emoswarm::Error& err) {
      throw emoswarm::Error(emoswarm::ErrorCode::Config, std::string("domain: ") + err.what());
    }
    *out = new es_spec{emoswarm::default_behavior(e, domain)};
  });
}

void es_spec_destroy(es_spec* spec) { delete spec; }

es_status es_spec_set(es_spec* spec, const char* key, const char* value) {
  if (spec == nullptr || key == nullptr || value == nullptr) {
    return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { emoswarm::set_parameter(spec->spec, key, value); });
}

es_status es_spec_describe(const es_spec* spec, char** json_out) {
  if (spec == nullptr || json_out == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    emoswarm::RunMetadata meta{spec->spec, {}};
    *json_out = copy_string(emoswarm::metadata_to_json(meta));
  });
}

es_status es_run(const es_spec* spec, int count, double duration, double dt, uint64_t seed, es_log** out) {
  if (spec == nullptr || out == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    emoswarm::RunOptions options{count, duration, dt, seed};
    *out = new es_log{emoswarm::run(spec->spec, options)};
  });
}

void es_log_destroy(es_log* log) { delete log; }

size_t es_log_record_count(const es_log* log) { return log ? log->log.records.size() : 0; }

int es_log_robot_count(const es_log* log) { return log ? log->log.robot_count() : 0; }

size_t es_log_sample_count(const es_log* log) { return log ? log->log.sample_count() : 0; }

es_status es_log_record(const es_log* log, size_t index, es_record* out) {
  if (log == nullptr || out == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= log->log.records.size()) return fail(ES_ERR_INVALID_ARGUMENT, "record index out of range");
  const emoswarm::TrajectoryRecord& r = log->log.records[index];
  *out = es_record{r.t, r.robot_id, r.x, r.y, r.theta, r.v, r.omega};
  return ES_OK;
}

es_status es_log_metadata(const es_log* log, char** json_out) {
  if (log == nullptr || json_out == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  *json_out = nullptr;
  if (!log->log.metadata) return fail(ES_ERR_INVALID_ARGUMENT, "log carries no metadata");
  return guarded([&] { *json_out = copy_string(emoswarm::metadata_to_json(*log->log.metadata)); });
}

es_status es_log_write(const es_log* log, const char* path, es_format format) {
  if (log == nullptr || path == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  if (format != ES_FORMAT_CSV && format != ES_FORMAT_JSONL) {
    return fail(ES_ERR_INVALID_ARGUMENT, "unknown log format");
  }
  return guarded([&] {
    emoswarm::write_log(std::filesystem::path(path), log->log,
                        format == ES_FORMAT_CSV ? emoswarm::LogFormat::Csv : emoswarm::LogFormat::Jsonl);
  });
}

es_status es_log_read(const char* path, es_log** out) {
  if (path == nullptr || out == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new es_log{emoswarm::read_log(std::filesystem::path(path))}; });
}

es_status es_render_frames(const es_log* log, const char* frames_dir, int stride, int trail_robots,
                           int* frames_written) {
  if (log == nullptr || frames_dir == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const int written = emoswarm::render_frames(log->log, frames_dir, stride, trail_robots);
    if (frames_written != nullptr) *frames_written = written;
  });
}

es_status es_metrics_report(const es_log* log, es_report_mode mode, char** report_out) {
  if (log == nullptr || report_out == nullptr) return fail(ES_ERR_INVALID_ARGUMENT, "null argument");
  *report_out = nullptr;
  return guarded([&] {
    const auto rows = emoswarm::metrics_table(log->log);
    *report_out = copy_string(mode == ES_REPORT_JSON ? emoswarm::format_metrics_json(rows)
                                                     : emoswarm::format_metrics_text(rows));
  });
}

}  // extern "C"
