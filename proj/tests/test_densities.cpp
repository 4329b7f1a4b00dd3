#include <gtest/gtest.h>

#include <cmath>

#include "emoswarm/densities.hpp"
#include "emoswarm/geometry.hpp"

using namespace emoswarm;

namespace {
const Domain kUnit{0.0, 1.0, 0.0, 1.0};
const std::vector<Vec2> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}  // namespace

TEST(Uniform, ConstantEverywhere) {
  EXPECT_EQ(uniform_density({0.5, 0.5}), 1.0);
  EXPECT_EQ(uniform_density({0.0, 1.0}), 1.0);
}

TEST(Uniform, IntegratesToArea) {
  const auto m = integrate_cell(kSquare, DensityField::uniform(kUnit), 128, {0, 0});
  EXPECT_NEAR(m.mass, 1.0, 1e-9);
}

TEST(Gaussian, PeakAndOneSigma) {
  EXPECT_DOUBLE_EQ(gaussian_center_density({0.5, 0.5}, kUnit, 0.3), 1.0);
  EXPECT_NEAR(gaussian_center_density({0.5 + 0.2, 0.5}, kUnit, 0.2), std::exp(-0.5), 1e-15);
  EXPECT_NEAR(gaussian_center_density({0.5, 0.5 - 0.2}, kUnit, 0.2), 0.60653, 1e-5);
}

TEST(Gaussian, SymmetricAboutCenter) {
  for (double dx : {0.05, 0.2, 0.4}) {
    const double a = gaussian_center_density({0.5 + dx, 0.3}, kUnit, 0.2);
    EXPECT_DOUBLE_EQ(a, gaussian_center_density({0.5 - dx, 0.3}, kUnit, 0.2));
    EXPECT_DOUBLE_EQ(a, gaussian_center_density({0.5 + dx, 0.7}, kUnit, 0.2));
  }
}

TEST(Gaussian, CentroidOfUnitSquareIsCenter) {
  const auto m = integrate_cell(kSquare, DensityField::gaussian_center(kUnit, 0.2), 128, {0, 0});
  EXPECT_NEAR(m.centroid.x, 0.5, 1e-6);
  EXPECT_NEAR(m.centroid.y, 0.5, 1e-6);
}

TEST(Boundary, OneOnEdges) {
  EXPECT_DOUBLE_EQ(boundary_density({0.0, 0.4}, kUnit, 0.1, 0.05), 1.0);
  EXPECT_DOUBLE_EQ(boundary_density({0.7, 1.0}, kUnit, 0.1, 0.05), 1.0);
  EXPECT_DOUBLE_EQ(boundary_density({0.05, 0.5}, kUnit, 0.1, 0.05), 1.0);
}

TEST(Boundary, CenterClosedForm) {
  const double expected = 0.05 + 0.95 * std::exp(-(0.4 * 0.4) / 0.02);
  EXPECT_NEAR(boundary_density({0.5, 0.5}, kUnit, 0.1, 0.05), expected, 1e-15);
  EXPECT_NEAR(expected, 0.05, 1e-3);
}

TEST(Boundary, DecreasesTowardCenter) {
  double prev = 2.0;
  for (double x = 0.0; x <= 0.5; x += 0.05) {
    const double v = boundary_density({x, 0.5}, kUnit, 0.1, 0.05);
    EXPECT_LE(v, prev);
    EXPECT_GE(v, 0.05);
    prev = v;
  }
}

TEST(Field, DispatchesAndValidates) {
  EXPECT_DOUBLE_EQ(DensityField::gaussian_center(kUnit, 0.2)({0.7, 0.5}),
                   gaussian_center_density({0.7, 0.5}, kUnit, 0.2));
  EXPECT_DOUBLE_EQ(DensityField::boundary(kUnit, 0.1, 0.05)({0.3, 0.5}),
                   boundary_density({0.3, 0.5}, kUnit, 0.1, 0.05));
  try {
    DensityField::gaussian_center(kUnit, 0.0).validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonpositiveSigma);
  }
  try {
    DensityField::boundary(kUnit, 0.6, 0.05).validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadMargin);
  }
}

TEST(Field, ParsesKinds) {
  EXPECT_EQ(parse_density_kind("boundary"), DensityKind::Boundary);
  EXPECT_EQ(to_string(DensityKind::GaussianCenter), "gaussian_center");
  EXPECT_THROW(parse_density_kind("spiral"), Error);
}
