#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "emoswarm/densities.hpp"
#include "emoswarm/types.hpp"

namespace emoswarm {

inline constexpr double kMinSeparation = 1e-9;
inline constexpr double kMinMass = 1e-12;
inline constexpr int kDefaultQuadratureResolution = 128;

/// Convex region of the domain closest to one robot; vertices counterclockwise.
struct VoronoiCell {
  std::size_t owner = 0;
  std::vector<Vec2> vertices;
};

/// Density-weighted moments of a region.
struct CellMoments {
  double mass = 0.0;
  Vec2 centroid;
  /// Integral of |q - about|^2 phi(q) over the region.
  double second_moment = 0.0;
};

double polygon_area(std::span<const Vec2> polygon);
Vec2 polygon_centroid(std::span<const Vec2> polygon);
/// Inclusive of the boundary up to `tolerance`; polygon must be convex and CCW.
bool convex_contains(std::span<const Vec2> polygon, const Vec2& q, double tolerance = 1e-12);

/// Keeps the part of a convex polygon where dot(normal, q) <= offset.
std::vector<Vec2> clip_half_plane(std::span<const Vec2> polygon, const Vec2& normal, double offset);

/// Cell i is the domain rectangle clipped by the perpendicular bisectors
/// between robot i and every other robot.
///
/// Throws OutOfDomain if a position is not strictly inside the domain and
/// DuplicatePosition if two robots are closer than kMinSeparation.
std::vector<VoronoiCell> compute_voronoi(std::span<const Vec2> positions, const Domain& domain);

/// Quadrature over a convex polygon: its bounding box is split into
/// resolution x resolution sub-rectangles. Sub-rectangles fully inside the
/// polygon are evaluated at their midpoint; sub-rectangles crossing the
/// boundary are clipped to the polygon and evaluated at the centroid of the
/// clipped piece, weighted by its exact area. The geometric part is therefore
/// exact, and the result varies continuously with the vertices.
CellMoments integrate_cell(std::span<const Vec2> polygon, const DensityField& density,
                           int resolution, const Vec2& about);
/// Same quadrature for an arbitrary nonnegative density.
CellMoments integrate_cell(std::span<const Vec2> polygon, const std::function<double(const Vec2&)>& density,
                           int resolution, const Vec2& about);

/// Throws ZeroMass when the density integral over the cell is below kMinMass.
Vec2 cell_centroid(const VoronoiCell& cell, const DensityField& density,
                   int resolution = kDefaultQuadratureResolution);

/// Centroids of every cell of the partition generated by `positions`.
std::vector<Vec2> voronoi_centroids(std::span<const Vec2> positions, const DensityField& density,
                                    int resolution = kDefaultQuadratureResolution);

/// Sum over robots of the density-weighted second moment of each cell about its robot.
double locational_cost(std::span<const Vec2> positions, const DensityField& density,
                       const Domain& domain, int resolution = kDefaultQuadratureResolution);

}  // namespace emoswarm
