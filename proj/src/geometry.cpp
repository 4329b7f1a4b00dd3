#include "emoswarm/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace emoswarm {
namespace {

struct Span {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool empty() const { return lo > hi; }
};

// Horizontal extent of a convex polygon at height y.
Span span_at(std::span<const Vec2> polygon, double y) {
  Span s;
  const std::size_t n = polygon.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2& a = polygon[k];
    const Vec2& b = polygon[(k + 1) % n];
    if (a.y == b.y) {
      if (a.y == y) {
        s.lo = std::min({s.lo, a.x, b.x});
        s.hi = std::max({s.hi, a.x, b.x});
      }
      continue;
    }
    if ((a.y - y) * (b.y - y) > 0.0) continue;
    const double x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
    s.lo = std::min(s.lo, x);
    s.hi = std::max(s.hi, x);
  }
  return s;
}

// Exact area, centroid and integral of |q - about|^2 for a simple polygon.
struct PieceMoments {
  double area = 0.0;
  Vec2 centroid;
  double polar = 0.0;
};

PieceMoments piece_moments(std::span<const Vec2> polygon, const Vec2& about) {
  PieceMoments m;
  const std::size_t n = polygon.size();
  if (n < 3) return m;
  double a2 = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  double ixx = 0.0;
  double iyy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 p = polygon[k] - about;
    const Vec2 q = polygon[(k + 1) % n] - about;
    const double c = cross(p, q);
    a2 += c;
    cx += (p.x + q.x) * c;
    cy += (p.y + q.y) * c;
    ixx += (p.x * p.x + p.x * q.x + q.x * q.x) * c;
    iyy += (p.y * p.y + p.y * q.y + q.y * q.y) * c;
  }
  m.area = 0.5 * a2;
  if (m.area <= 0.0) return PieceMoments{};
  m.centroid = about + Vec2{cx, cy} / (3.0 * a2);
  m.polar = (ixx + iyy) / 12.0;
  return m;
}

}  // namespace

double polygon_area(std::span<const Vec2> polygon) {
  double a2 = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t k = 0; k < n; ++k) a2 += cross(polygon[k], polygon[(k + 1) % n]);
  return 0.5 * a2;
}

Vec2 polygon_centroid(std::span<const Vec2> polygon) {
  if (polygon.empty()) return {};
  return piece_moments(polygon, polygon.front()).centroid;
}

bool convex_contains(std::span<const Vec2> polygon, const Vec2& q, double tolerance) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2& a = polygon[k];
    const Vec2& b = polygon[(k + 1) % n];
    const Vec2 edge = b - a;
    const double len = norm(edge);
    if (len == 0.0) continue;
    if (cross(edge, q - a) / len < -tolerance) return false;
  }
  return true;
}

std::vector<Vec2> clip_half_plane(std::span<const Vec2> polygon, const Vec2& normal, double offset) {
  std::vector<Vec2> out;
  const std::size_t n = polygon.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  auto push = [&out](const Vec2& p) {
    if (out.empty() || squared_norm(out.back() - p) > 1e-30) out.push_back(p);
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2& a = polygon[k];
    const Vec2& b = polygon[(k + 1) % n];
    const double da = dot(normal, a) - offset;
    const double db = dot(normal, b) - offset;
    if (da <= 0.0) push(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      push(a + (b - a) * (da / (da - db)));
    }
  }
  if (out.size() > 1 && squared_norm(out.back() - out.front()) <= 1e-30) out.pop_back();
  if (out.size() < 3) out.clear();
  return out;
}

std::vector<VoronoiCell> compute_voronoi(std::span<const Vec2> positions, const Domain& domain) {
  domain.validate();
  const std::size_t n = positions.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!domain.strictly_contains(positions[i])) {
      throw Error(ErrorCode::OutOfDomain, "robot " + std::to_string(i) + " lies outside the domain");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (norm(positions[i] - positions[j]) < kMinSeparation) {
        throw Error(ErrorCode::DuplicatePosition, "robots " + std::to_string(j) + " and " +
                                                      std::to_string(i) + " coincide");
      }
    }
  }

  const std::array<Vec2, 4> rect = {Vec2{domain.x_min, domain.y_min}, Vec2{domain.x_max, domain.y_min},
                                    Vec2{domain.x_max, domain.y_max}, Vec2{domain.x_min, domain.y_max}};
  std::vector<VoronoiCell> cells(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec2> poly(rect.begin(), rect.end());
    for (std::size_t j = 0; j < n && !poly.empty(); ++j) {
      if (j == i) continue;
      const Vec2 normal = positions[j] - positions[i];
      const double offset = dot(normal, (positions[i] + positions[j]) * 0.5);
      poly = clip_half_plane(poly, normal, offset);
    }
    cells[i].owner = i;
    cells[i].vertices = std::move(poly);
  }
  return cells;
}

namespace {

template <typename Density>
CellMoments integrate(std::span<const Vec2> polygon, const Density& density, int resolution, const Vec2& about) {
  if (resolution < 1) throw Error(ErrorCode::InvalidArgument, "quadrature resolution must be positive");
  CellMoments result;
  if (polygon.size() < 3) return result;

  double x0 = polygon[0].x, x1 = polygon[0].x, y0 = polygon[0].y, y1 = polygon[0].y;
  for (const Vec2& v : polygon) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  const double hx = (x1 - x0) / resolution;
  const double hy = (y1 - y0) / resolution;
  if (!(hx > 0.0) || !(hy > 0.0)) return result;
  const double cell_area = hx * hy;
  const double cell_spread = (hx * hx + hy * hy) / 12.0;

  // Edge half-planes of the polygon, inside where dot(n, q) <= c.
  std::vector<std::pair<Vec2, double>> edges;
  edges.reserve(polygon.size());
  for (std::size_t k = 0; k < polygon.size(); ++k) {
    const Vec2& a = polygon[k];
    const Vec2& b = polygon[(k + 1) % polygon.size()];
    const Vec2 n{b.y - a.y, a.x - b.x};
    edges.emplace_back(n, dot(n, a));
  }

  double mass = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double second = 0.0;
  std::vector<Vec2> piece;

  Span below = span_at(polygon, y0);
  for (int j = 0; j < resolution; ++j) {
    const double ya = y0 + j * hy;
    const double yb = (j + 1 == resolution) ? y1 : y0 + (j + 1) * hy;
    const Span above = span_at(polygon, yb);

    // Extent of the polygon within the strip, for skipping empty columns.
    double strip_lo = std::min(below.lo, above.lo);
    double strip_hi = std::max(below.hi, above.hi);
    for (const Vec2& v : polygon) {
      if (v.y > ya && v.y < yb) {
        strip_lo = std::min(strip_lo, v.x);
        strip_hi = std::max(strip_hi, v.x);
      }
    }
    const bool has_inner = !below.empty() && !above.empty();
    const double inner_lo = std::max(below.lo, above.lo);
    const double inner_hi = std::min(below.hi, above.hi);
    const double ym = 0.5 * (ya + yb);

    for (int i = 0; i < resolution; ++i) {
      const double xa = x0 + i * hx;
      const double xb = (i + 1 == resolution) ? x1 : x0 + (i + 1) * hx;
      if (xb <= strip_lo || xa >= strip_hi) continue;

      if (has_inner && xa >= inner_lo && xb <= inner_hi) {
        const Vec2 mid{0.5 * (xa + xb), ym};
        const double w = density(mid) * cell_area;
        mass += w;
        mx += w * mid.x;
        my += w * mid.y;
        second += w * (squared_norm(mid - about) + cell_spread);
        continue;
      }

      piece.assign({Vec2{xa, ya}, Vec2{xb, ya}, Vec2{xb, yb}, Vec2{xa, yb}});
      for (const auto& [n, c] : edges) {
        piece = clip_half_plane(piece, n, c);
        if (piece.empty()) break;
      }
      if (piece.empty()) continue;
      const PieceMoments pm = piece_moments(piece, about);
      if (pm.area <= 0.0) continue;
      const double phi = density(pm.centroid);
      const double w = phi * pm.area;
      mass += w;
      mx += w * pm.centroid.x;
      my += w * pm.centroid.y;
      second += phi * pm.polar;
    }
    below = above;
  }

  result.mass = mass;
  result.second_moment = second;
  if (mass > 0.0) result.centroid = Vec2{mx / mass, my / mass};
  return result;
}

}  // namespace

CellMoments integrate_cell(std::span<const Vec2> polygon, const DensityField& density, int resolution,
                           const Vec2& about) {
  return integrate(polygon, density, resolution, about);
}

CellMoments integrate_cell(std::span<const Vec2> polygon, const std::function<double(const Vec2&)>& density,
                           int resolution, const Vec2& about) {
  return integrate(polygon, density, resolution, about);
}

Vec2 cell_centroid(const VoronoiCell& cell, const DensityField& density, int resolution) {
  if (cell.vertices.size() < 3 || !(polygon_area(cell.vertices) > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "cell " + std::to_string(cell.owner) + " is degenerate");
  }
  const CellMoments m = integrate_cell(cell.vertices, density, resolution, cell.vertices.front());
  if (!(m.mass >= kMinMass)) {
    throw Error(ErrorCode::ZeroMass,
                "density integral over cell " + std::to_string(cell.owner) + " is below 1e-12");
  }
  return m.centroid;
}

std::vector<Vec2> voronoi_centroids(std::span<const Vec2> positions, const DensityField& density,
                                    int resolution) {
  const std::vector<VoronoiCell> cells = compute_voronoi(positions, density.domain);
  std::vector<Vec2> centroids;
  centroids.reserve(cells.size());
  for (const VoronoiCell& cell : cells) centroids.push_back(cell_centroid(cell, density, resolution));
  return centroids;
}

double locational_cost(std::span<const Vec2> positions, const DensityField& density,
                       const Domain& domain, int resolution) {
  const std::vector<VoronoiCell> cells = compute_voronoi(positions, domain);
  double cost = 0.0;
  for (const VoronoiCell& cell : cells) {
    cost += integrate_cell(cell.vertices, density, resolution, positions[cell.owner]).second_moment;
  }
  return cost;
}

}  // namespace emoswarm
