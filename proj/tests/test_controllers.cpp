#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "emoswarm/controllers.hpp"
#include "emoswarm/dynamics.hpp"

using namespace emoswarm;

namespace {
const Domain kUnit{0.0, 1.0, 0.0, 1.0};
}

TEST(GotoGoal, Subtracts) {
  EXPECT_EQ(goto_goal_si({0, 0}, {1, 2}).u, (Vec2{1, 2}));
  EXPECT_EQ(goto_goal_si({0.3, 0.4}, {0.3, 0.4}).u, (Vec2{0, 0}));
}

TEST(GotoGoal, SingleIntegratorDecaysExponentially) {
  Vec2 p{1.0, -0.5};
  const Vec2 target{0.0, 0.0};
  for (int k = 1; k <= 300; ++k) {
    p = p + goto_goal_si(p, target).u * 0.01;
    const double exact = std::exp(-0.01 * k) * norm(Vec2{1.0, -0.5});
    EXPECT_NEAR(norm(p), exact, 0.01 * norm(Vec2{1.0, -0.5}));
  }
}

TEST(Coverage, FixedPointAtCentroid) {
  const std::vector<Vec2> p{{0.5, 0.5}};
  const SIControl c = coverage_si(p, 0, DensityField::uniform(kUnit), 1.0);
  EXPECT_NEAR(norm(c.u), 0.0, 1e-12);
}

TEST(Coverage, PointsToCentroid) {
  const std::vector<Vec2> p{{0.2, 0.2}};
  const SIControl c = coverage_si(p, 0, DensityField::uniform(kUnit), 1.0);
  EXPECT_NEAR(c.u.x, 0.3, 1e-12);
  EXPECT_NEAR(c.u.y, 0.3, 1e-12);
  const SIControl c2 = coverage_si(p, 0, DensityField::uniform(kUnit), 2.5);
  EXPECT_NEAR(c2.u.x, 0.75, 1e-12);
}

TEST(Diffeo, Examples) {
  EXPECT_EQ(si_to_uni({{1, 0}}, 0.0, {0.1, 1.0}), (UniControl{1.0, 0.0}));
  const UniControl turn = si_to_uni({{0, 1}}, 0.0, {0.1, 1.0});
  EXPECT_DOUBLE_EQ(turn.v, 0.0);
  EXPECT_DOUBLE_EQ(turn.omega, 10.0);
}

TEST(Diffeo, LinearAndGainScaling) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const double th = 3.0 * u(rng);
    const DiffeoParams p{0.2, 1.5};
    const UniControl ca = si_to_uni({a}, th, p), cb = si_to_uni({b}, th, p), cab = si_to_uni({a + b}, th, p);
    EXPECT_NEAR(cab.v, ca.v + cb.v, 1e-12);
    EXPECT_NEAR(cab.omega, ca.omega + cb.omega, 1e-12);
    const UniControl c2 = si_to_uni({a}, th, {0.2, 3.0});
    EXPECT_NEAR(c2.v, 2.0 * ca.v, 1e-12);
    EXPECT_NEAR(c2.omega, 2.0 * ca.omega, 1e-12);
  }
}

TEST(Diffeo, LookaheadPointRealizesScaledCommand) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double th = std::numbers::pi * u(rng);
    const Vec2 cmd{u(rng), u(rng)};
    const DiffeoParams p{0.05 + std::abs(u(rng)), 0.1 + 2.0 * std::abs(u(rng))};
    const UniControl c = si_to_uni({cmd}, th, p);
    const Vec2 vel = Vec2{std::cos(th), std::sin(th)} * c.v + Vec2{-std::sin(th), std::cos(th)} * (p.lookahead * c.omega);
    EXPECT_NEAR(vel.x, p.gain * cmd.x, 1e-12);
    EXPECT_NEAR(vel.y, p.gain * cmd.y, 1e-12);
  }
}

TEST(Diffeo, FiniteDifferenceRollout) {
  const DiffeoParams p{0.3, 1.0};
  const Vec2 cmd{0.4, -0.7};
  Pose pose{0.0, 0.0, 2.0};
  auto ahead = [&](const Pose& q) { return Vec2{q.x + p.lookahead * std::cos(q.theta), q.y + p.lookahead * std::sin(q.theta)}; };
  const Vec2 start = ahead(pose);
  for (int k = 0; k < 1000; ++k) pose = step_unicycle(pose, si_to_uni({cmd}, pose.theta, p), 1e-4);
  const Vec2 vel = (ahead(pose) - start) / 0.1;
  EXPECT_NEAR(vel.x, cmd.x, 1e-3);
  EXPECT_NEAR(vel.y, cmd.y, 1e-3);
}

TEST(Saturate, ClampsComponents) {
  EXPECT_EQ(saturate({0.5, 1.0}, 1.0, 2.0), (UniControl{0.5, 1.0}));
  EXPECT_EQ(saturate({3.0, -5.0}, 1.0, 2.0), (UniControl{1.0, -2.0}));
  EXPECT_EQ(saturate({3.0, -5.0}, SaturationLimits{false, 1.0, 2.0}), (UniControl{3.0, -5.0}));
}

TEST(Params, Validate) {
  EXPECT_THROW((DiffeoParams{0.0, 1.0}.validate()), Error);
  EXPECT_THROW((DiffeoParams{0.1, -1.0}.validate()), Error);
  EXPECT_THROW((SaturationLimits{true, 0.0, 1.0}.validate()), Error);
}
