#include "emoswarm/densities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace emoswarm {

std::string_view to_string(DensityKind kind) {
  switch (kind) {
    case DensityKind::Uniform: return "uniform";
    case DensityKind::GaussianCenter: return "gaussian_center";
    case DensityKind::Boundary: return "boundary";
  }
  return "uniform";
}

DensityKind parse_density_kind(std::string_view name) {
  if (name == "uniform") return DensityKind::Uniform;
  if (name == "gaussian_center") return DensityKind::GaussianCenter;
  if (name == "boundary") return DensityKind::Boundary;
  throw Error(ErrorCode::Config, "density.kind: unknown density '" + std::string(name) +
                                     "' (valid: uniform, gaussian_center, boundary)");
}

double uniform_density(const Vec2&) { return 1.0; }

double gaussian_center_density(const Vec2& q, const Domain& domain, double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::NonpositiveSigma, "gaussian sigma must be positive");
  return std::exp(-squared_norm(q - domain.center()) / (2.0 * sigma * sigma));
}

double boundary_density(const Vec2& q, const Domain& domain, double margin, double floor) {
  if (!(margin > 0.0) || !(margin < 0.5 * domain.min_side())) {
    throw Error(ErrorCode::BadMargin, "boundary margin must lie in (0, min_side / 2)");
  }
  const double to_edge = std::max(
      0.0, std::min({q.x - domain.x_min, domain.x_max - q.x, q.y - domain.y_min, domain.y_max - q.y}));
  const double excess = std::max(0.0, to_edge - margin);
  return floor + (1.0 - floor) * std::exp(-excess * excess / (2.0 * margin * margin));
}

DensityField DensityField::uniform(const Domain& domain) {
  DensityField f;
  f.kind = DensityKind::Uniform;
  f.domain = domain;
  f.validate();
  return f;
}

DensityField DensityField::gaussian_center(const Domain& domain, double sigma) {
  DensityField f;
  f.kind = DensityKind::GaussianCenter;
  f.domain = domain;
  f.sigma = sigma;
  f.validate();
  return f;
}

DensityField DensityField::boundary(const Domain& domain, double margin, double floor) {
  DensityField f;
  f.kind = DensityKind::Boundary;
  f.domain = domain;
  f.margin = margin;
  f.floor = floor;
  f.validate();
  return f;
}

void DensityField::validate() const {
  domain.validate();
  switch (kind) {
    case DensityKind::Uniform:
      break;
    case DensityKind::GaussianCenter:
      if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::NonpositiveSigma, "gaussian sigma must be positive");
      }
      break;
    case DensityKind::Boundary:
      if (!(margin > 0.0) || !(margin < 0.5 * domain.min_side())) {
        throw Error(ErrorCode::BadMargin, "boundary margin must lie in (0, min_side / 2)");
      }
      if (!(floor > 0.0 && floor < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "boundary floor must lie in (0, 1)");
      }
      break;
  }
}

double DensityField::operator()(const Vec2& q) const {
  switch (kind) {
    case DensityKind::Uniform:
      return 1.0;
    case DensityKind::GaussianCenter:
      return std::exp(-squared_norm(q - domain.center()) / (2.0 * sigma * sigma));
    case DensityKind::Boundary: {
      const double to_edge = std::max(0.0, std::min({q.x - domain.x_min, domain.x_max - q.x,
                                                     q.y - domain.y_min, domain.y_max - q.y}));
      const double excess = std::max(0.0, to_edge - margin);
      return floor + (1.0 - floor) * std::exp(-excess * excess / (2.0 * margin * margin));
    }
  }
  return 0.0;
}

}  // namespace emoswarm
