#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "emoswarm/dynamics.hpp"

using namespace emoswarm;

namespace {

constexpr double kPi = std::numbers::pi;

// Largest deviation from the exact unit circle over one loop.
double loop_error(double dt) {
  Pose p{1.0, 0.0, kPi / 2};
  const auto steps = std::llround(2 * kPi / dt);
  double worst = 0.0;
  for (long long k = 1; k <= steps; ++k) {
    p = step_unicycle(p, {1.0, 1.0}, dt);
    worst = std::max(worst, norm(Vec2{p.x, p.y} - Vec2{std::cos(k * dt), std::sin(k * dt)}));
  }
  return worst;
}

}  // namespace

TEST(Step, RestIsFixed) {
  const Pose p{0.3, -0.2, 1.1};
  EXPECT_EQ(step_unicycle(p, {0.0, 0.0}, 0.05), p);
}

TEST(Step, StraightLine) {
  const Pose p = step_unicycle({0, 0, 0}, {1.0, 0.0}, 0.1);
  EXPECT_DOUBLE_EQ(p.x, 0.1);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  EXPECT_DOUBLE_EQ(p.theta, 0.0);
}

TEST(Step, StraightLineExactForAnyStep) {
  Pose p{0, 0, 0.6};
  for (int k = 0; k < 40; ++k) p = step_unicycle(p, {0.5, 0.0}, 0.1);
  EXPECT_NEAR(p.x, 2.0 * std::cos(0.6), 1e-14);
  EXPECT_NEAR(p.y, 2.0 * std::sin(0.6), 1e-14);
}

TEST(Step, UnitCircleCloses) {
  Pose p{0, 0, 0};
  const double dt = 1e-3;
  const auto steps = std::llround(2 * kPi / dt);
  for (long long k = 0; k < steps; ++k) p = step_unicycle(p, {1.0, 1.0}, dt);
  const double rest = 2 * kPi - steps * dt;
  if (rest > 0.0) p = step_unicycle(p, {1.0, 1.0}, rest);
  EXPECT_LT(norm(Vec2{p.x, p.y}), 5e-3);
}

TEST(Step, FirstOrderConvergence) {
  const double e4 = loop_error(4e-3), e2 = loop_error(2e-3), e1 = loop_error(1e-3);
  EXPECT_NEAR(e4 / e2, 2.0, 0.3);
  EXPECT_NEAR(e2 / e1, 2.0, 0.3);
}

TEST(Step, HeadingWrapped) {
  const Pose p = step_unicycle({0, 0, 3.1}, {0.0, 1.0}, 0.1);
  EXPECT_LT(p.theta, kPi);
  EXPECT_NEAR(p.theta, 3.2 - 2 * kPi, 1e-12);
}

TEST(Step, RejectsBadTimestep) {
  for (double dt : {0.0, -0.01, 0.2}) {
    try {
      step_unicycle({}, {1.0, 0.0}, dt);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadTimestep);
    }
  }
}

TEST(Clamp, InteriorUnchangedAndEdgesInset) {
  const Domain d{0.0, 2.0, 0.0, 1.0};
  EXPECT_EQ(clamp_to_domain({1.0, 0.5, 0.2}, d), (Pose{1.0, 0.5, 0.2}));
  const Pose out = clamp_to_domain({2.5, -0.3, 0.2}, d);
  EXPECT_DOUBLE_EQ(out.x, 2.0 - kRobotRadius);
  EXPECT_DOUBLE_EQ(out.y, kRobotRadius);
  EXPECT_DOUBLE_EQ(out.theta, 0.2);
}
