#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "emoswarm/behavior.hpp"

using namespace emoswarm;

TEST(Registry, TableOfShapesAndMovements) {
  const Domain d = default_domain();
  for (Emotion e : kAllEmotions) {
    const BehaviorSpec s = default_behavior(e, d);
    EXPECT_NO_THROW(s.validate());
    EXPECT_EQ(s.contour.has_value(), is_contour_emotion(e));
    EXPECT_EQ(s.density.has_value(), !is_contour_emotion(e));
  }
  EXPECT_EQ(default_behavior(Emotion::Happiness, d).contour->kind, ContourKind::Happiness);
  EXPECT_EQ(default_behavior(Emotion::Surprise, d).contour->kind, ContourKind::Surprise);
  EXPECT_EQ(default_behavior(Emotion::Sadness, d).contour->kind, ContourKind::Sadness);
  EXPECT_EQ(default_behavior(Emotion::Fear, d).density->kind, DensityKind::Uniform);
  EXPECT_EQ(default_behavior(Emotion::Disgust, d).density->kind, DensityKind::Boundary);
  EXPECT_EQ(default_behavior(Emotion::Anger, d).density->kind, DensityKind::GaussianCenter);
}

TEST(Registry, SpeedAndSmoothnessLevels) {
  const Domain d = default_domain();
  auto spec = [&](Emotion e) { return default_behavior(e, d); };
  // Fast > slow > very slow in gain; smooth lookahead > angular lookahead.
  EXPECT_EQ(spec(Emotion::Happiness).diffeo.gain, spec(Emotion::Anger).diffeo.gain);
  EXPECT_EQ(spec(Emotion::Fear).diffeo.gain, spec(Emotion::Disgust).diffeo.gain);
  EXPECT_GT(spec(Emotion::Anger).diffeo.gain, spec(Emotion::Fear).diffeo.gain);
  EXPECT_GT(spec(Emotion::Fear).diffeo.gain, spec(Emotion::Sadness).diffeo.gain);
  EXPECT_EQ(spec(Emotion::Happiness).diffeo.lookahead, spec(Emotion::Sadness).diffeo.lookahead);
  EXPECT_EQ(spec(Emotion::Fear).diffeo.lookahead, spec(Emotion::Anger).diffeo.lookahead);
  EXPECT_GT(spec(Emotion::Happiness).diffeo.lookahead, spec(Emotion::Anger).diffeo.lookahead);
}

TEST(Registry, SadnessCoversAnEighthIn8Seconds) {
  const BehaviorSpec s = default_behavior(Emotion::Sadness, default_domain());
  EXPECT_DOUBLE_EQ(s.contour->phase_rate * default_duration(Emotion::Sadness), std::numbers::pi / 4);
}

TEST(Registry, LengthsScaleWithDomain) {
  const BehaviorSpec a = default_behavior(Emotion::Happiness, Domain::from_size(2.0, 2.0));
  const BehaviorSpec b = default_behavior(Emotion::Happiness, Domain::from_size(4.0, 4.0));
  EXPECT_DOUBLE_EQ(2.0 * a.contour->radius, b.contour->radius);
  EXPECT_DOUBLE_EQ(2.0 * a.diffeo.lookahead, b.diffeo.lookahead);
}

TEST(Registry, DefaultDurations) {
  EXPECT_EQ(default_duration(Emotion::Happiness), 4.0);
  EXPECT_EQ(default_duration(Emotion::Surprise), 4.0);
  EXPECT_EQ(default_duration(Emotion::Anger), 6.0);
  EXPECT_EQ(default_duration(Emotion::Sadness), 8.0);
  EXPECT_EQ(default_duration(Emotion::Disgust), 12.0);
  EXPECT_EQ(default_duration(Emotion::Fear), 15.0);
}

TEST(Names, ParseRoundTripAndUnknownListsAll) {
  for (Emotion e : kAllEmotions) EXPECT_EQ(parse_emotion(to_string(e)), e);
  try {
    parse_emotion("joy");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Config);
    const std::string msg = e.what();
    for (Emotion em : kAllEmotions) EXPECT_NE(msg.find(to_string(em)), std::string::npos);
  }
}

TEST(Overrides, SetsValues) {
  BehaviorSpec s = default_behavior(Emotion::Anger, default_domain());
  set_parameter(s, "diffeo.gain", "3.5");
  set_parameter(s, "limits.enabled", "false");
  set_parameter(s, "density.kind", "uniform");
  EXPECT_EQ(s.diffeo.gain, 3.5);
  EXPECT_FALSE(s.limits.enabled);
  EXPECT_EQ(s.density->kind, DensityKind::Uniform);
}

TEST(Overrides, ErrorsNameTheKey) {
  BehaviorSpec s = default_behavior(Emotion::Fear, default_domain());
  const BehaviorSpec before = s;
  for (auto [key, value] : {std::pair{"diffeo.gain", "-1"}, std::pair{"kappa", "abc"},
                            std::pair{"contour.radius", "0.3"}, std::pair{"no.such", "1"},
                            std::pair{"limits.v_max", "0"}}) {
    try {
      set_parameter(s, key, value);
      FAIL() << key;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Config);
      EXPECT_NE(std::string(e.what()).find(key), std::string::npos);
    }
  }
  EXPECT_EQ(s.diffeo.gain, before.diffeo.gain);
  EXPECT_EQ(s.limits.v_max, before.limits.v_max);
}

TEST(Overrides, EveryKeyListed) {
  const auto keys = parameter_keys();
  EXPECT_NE(std::find(keys.begin(), keys.end(), "contour.phase_rate"), keys.end());
  EXPECT_NE(std::find(keys.begin(), keys.end(), "quadrature_resolution"), keys.end());
}
