#include <gtest/gtest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>

#include "emoswarm/emoswarm.h"

namespace {

struct SpecHandle {
  es_spec* p = nullptr;
  ~SpecHandle() { es_spec_destroy(p); }
};
struct LogHandle {
  es_log* p = nullptr;
  ~LogHandle() { es_log_destroy(p); }
};

}  // namespace

TEST(CApi, NamesAndDurations) {
  EXPECT_STREQ(es_emotion_names(), "happiness, surprise, sadness, fear, disgust, anger");
  EXPECT_EQ(es_default_duration("sadness"), 8.0);
  EXPECT_LT(es_default_duration("joy"), 0.0);
  EXPECT_STREQ(es_status_name(ES_ERR_CONFIG), "configuration error");
}

TEST(CApi, UnknownEmotionIsConfigError) {
  SpecHandle s;
  EXPECT_EQ(es_spec_create("joy", 3.2, 2.0, &s.p), ES_ERR_CONFIG);
  EXPECT_EQ(s.p, nullptr);
  EXPECT_NE(std::string(es_last_error()).find("disgust"), std::string::npos);
}

TEST(CApi, RunAndInspect) {
  SpecHandle s;
  ASSERT_EQ(es_spec_create("sadness", 3.2, 2.0, &s.p), ES_OK);
  ASSERT_EQ(es_spec_set(s.p, "contour.phase_rate", "0.2"), ES_OK);
  LogHandle log;
  ASSERT_EQ(es_run(s.p, 5, 1.0, 0.01, 3, &log.p), ES_OK);
  EXPECT_EQ(es_log_record_count(log.p), 505u);
  EXPECT_EQ(es_log_robot_count(log.p), 5);
  EXPECT_EQ(es_log_sample_count(log.p), 101u);
  es_record r{};
  ASSERT_EQ(es_log_record(log.p, 504, &r), ES_OK);
  EXPECT_EQ(r.robot_id, 4);
  EXPECT_DOUBLE_EQ(r.t, 1.0);
  EXPECT_EQ(es_log_record(log.p, 505, &r), ES_ERR_INVALID_ARGUMENT);

  char* meta = nullptr;
  ASSERT_EQ(es_log_metadata(log.p, &meta), ES_OK);
  EXPECT_NE(std::strstr(meta, "\"phase_rate\":0.2"), nullptr);
  es_string_free(meta);

  char* report = nullptr;
  ASSERT_EQ(es_metrics_report(log.p, ES_REPORT_JSON, &report), ES_OK);
  EXPECT_NE(std::strstr(report, "angularity"), nullptr);
  es_string_free(report);
}

TEST(CApi, SetRejectsBadValues) {
  SpecHandle s;
  ASSERT_EQ(es_spec_create("anger", 4.3, 3.6, &s.p), ES_OK);
  EXPECT_EQ(es_spec_set(s.p, "diffeo.gain", "fast"), ES_ERR_CONFIG);
  EXPECT_NE(std::string(es_last_error()).find("diffeo.gain"), std::string::npos);
  char* json = nullptr;
  ASSERT_EQ(es_spec_describe(s.p, &json), ES_OK);
  EXPECT_NE(std::strstr(json, "\"x_max\":4.3"), nullptr);
  es_string_free(json);
}

TEST(CApi, RunErrorsMapToStatus) {
  SpecHandle s;
  ASSERT_EQ(es_spec_create("fear", 3.2, 2.0, &s.p), ES_OK);
  LogHandle log;
  EXPECT_EQ(es_run(s.p, 5, 1.0, 0.5, 1, &log.p), ES_ERR_BAD_TIMESTEP);
  EXPECT_EQ(log.p, nullptr);
  EXPECT_EQ(es_run(nullptr, 5, 1.0, 0.01, 1, &log.p), ES_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(es_spec_create("fear", -1.0, 2.0, &s.p), ES_ERR_CONFIG);
}

TEST(CApi, WriteReadRender) {
  const auto dir = std::filesystem::temp_directory_path() / "emoswarm_capi_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  SpecHandle s;
  ASSERT_EQ(es_spec_create("happiness", 3.2, 2.0, &s.p), ES_OK);
  LogHandle log;
  ASSERT_EQ(es_run(s.p, 3, 0.5, 0.01, 1, &log.p), ES_OK);
  const std::string path = (dir / "h.csv").string();
  ASSERT_EQ(es_log_write(log.p, path.c_str(), ES_FORMAT_CSV), ES_OK);
  LogHandle back;
  ASSERT_EQ(es_log_read(path.c_str(), &back.p), ES_OK);
  EXPECT_EQ(es_log_record_count(back.p), es_log_record_count(log.p));
  int frames = 0;
  ASSERT_EQ(es_render_frames(back.p, (dir / "frames").string().c_str(), 25, 2, &frames), ES_OK);
  EXPECT_EQ(frames, 3);

  std::FILE* f = std::fopen((dir / "bad.csv").string().c_str(), "w");
  std::fputs("t,robot_id,x,y,theta,v,omega\n0,0,1\n", f);
  std::fclose(f);
  LogHandle bad;
  EXPECT_EQ(es_log_read((dir / "bad.csv").string().c_str(), &bad.p), ES_ERR_MALFORMED_LOG);
  EXPECT_NE(std::string(es_last_error()).find("line 2"), std::string::npos);
  std::filesystem::remove_all(dir);
}
