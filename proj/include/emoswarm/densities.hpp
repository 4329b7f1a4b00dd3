#pragma once

#include <string>
#include <string_view>

#include "emoswarm/types.hpp"

namespace emoswarm {

enum class DensityKind { Uniform, GaussianCenter, Boundary };

std::string_view to_string(DensityKind kind);
/// Throws Config for names other than uniform, gaussian_center, boundary.
DensityKind parse_density_kind(std::string_view name);

double uniform_density(const Vec2& q);
double gaussian_center_density(const Vec2& q, const Domain& domain, double sigma);
double boundary_density(const Vec2& q, const Domain& domain, double margin, double floor);

/// Nonnegative field over a rectangular domain, bounded by 1.
///
/// Only the parameters relevant to `kind` are read; the others are kept so a
/// spec can switch kinds via configuration overrides without losing values.
struct DensityField {
  DensityKind kind = DensityKind::Uniform;
  Domain domain;
  double sigma = 0.15;
  double margin = 0.08;
  double floor = 0.05;

  static DensityField uniform(const Domain& domain);
  static DensityField gaussian_center(const Domain& domain, double sigma);
  static DensityField boundary(const Domain& domain, double margin, double floor);

  /// Throws NonpositiveSigma / BadMargin / InvalidArgument on bad parameters.
  void validate() const;

  double operator()(const Vec2& q) const;
};

}  // namespace emoswarm
