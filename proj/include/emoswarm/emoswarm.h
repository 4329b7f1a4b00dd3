/* C interface to the emoswarm simulation library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns an es_status; on
 * failure es_last_error() describes the problem for the calling thread until
 * the next failing call on that thread. Strings returned through char** out
 * parameters are released with es_string_free.
 */
#ifndef EMOSWARM_EMOSWARM_H
#define EMOSWARM_EMOSWARM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EMOSWARM_BUILDING_LIBRARY)
#    define ES_API __declspec(dllexport)
#  else
#    define ES_API __declspec(dllimport)
#  endif
#else
#  define ES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum es_status {
  ES_OK = 0,
  ES_ERR_INVALID_ARGUMENT = 1,
  ES_ERR_CONFIG = 2,
  ES_ERR_DUPLICATE_POSITION = 3,
  ES_ERR_OUT_OF_DOMAIN = 4,
  ES_ERR_ZERO_MASS = 5,
  ES_ERR_NONPOSITIVE_SIGMA = 6,
  ES_ERR_BAD_MARGIN = 7,
  ES_ERR_WRONG_KIND = 8,
  ES_ERR_BAD_TIMESTEP = 9,
  ES_ERR_PLACEMENT_FAILURE = 10,
  ES_ERR_TOO_SHORT = 11,
  ES_ERR_MALFORMED_LOG = 12,
  ES_ERR_IO = 13,
  ES_ERR_INTERNAL = 14
} es_status;

typedef enum es_format { ES_FORMAT_CSV = 0, ES_FORMAT_JSONL = 1 } es_format;

typedef enum es_report_mode { ES_REPORT_TEXT = 0, ES_REPORT_JSON = 1 } es_report_mode;

typedef struct es_spec es_spec;
typedef struct es_log es_log;

typedef struct es_record {
  double t;
  int robot_id;
  double x;
  double y;
  double theta;
  double v;
  double omega;
} es_record;

ES_API const char* es_version(void);
ES_API const char* es_status_name(es_status status);
ES_API const char* es_last_error(void);
ES_API void es_string_free(char* text);

/* Comma-separated list of the six emotion names; static storage. */
ES_API const char* es_emotion_names(void);
/* Default run length for an emotion in seconds; negative for unknown names. */
ES_API double es_default_duration(const char* emotion);

/* Registry defaults for `emotion` scaled to a width x height domain. */
ES_API es_status es_spec_create(const char* emotion, double width, double height, es_spec** out);
ES_API void es_spec_destroy(es_spec* spec);
/* Override one parameter, e.g. ("diffeo.gain", "3.5"). ES_ERR_CONFIG on failure. */
ES_API es_status es_spec_set(es_spec* spec, const char* key, const char* value);
/* Effective parameters as a JSON object. */
ES_API es_status es_spec_describe(const es_spec* spec, char** json_out);

ES_API es_status es_run(const es_spec* spec, int count, double duration, double dt, uint64_t seed,
                        es_log** out);
ES_API void es_log_destroy(es_log* log);
ES_API size_t es_log_record_count(const es_log* log);
ES_API int es_log_robot_count(const es_log* log);
ES_API size_t es_log_sample_count(const es_log* log);
ES_API es_status es_log_record(const es_log* log, size_t index, es_record* out);
/* Metadata as JSON, ES_ERR_INVALID_ARGUMENT if the log carries none. */
ES_API es_status es_log_metadata(const es_log* log, char** json_out);

ES_API es_status es_log_write(const es_log* log, const char* path, es_format format);
ES_API es_status es_log_read(const char* path, es_log** out);

ES_API es_status es_render_frames(const es_log* log, const char* frames_dir, int stride, int trail_robots,
                                  int* frames_written);
ES_API es_status es_metrics_report(const es_log* log, es_report_mode mode, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* EMOSWARM_EMOSWARM_H */
