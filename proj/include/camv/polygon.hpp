#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

namespace camv {

/// Ordered 2-D points in mm, one point per column. A closed polyline does
/// not repeat its first point.
struct Polyline2d {
  Eigen::Matrix2Xd points;
  bool closed = false;

  Eigen::Index size() const { return points.cols(); }
};

/// Shoelace area; positive for counter-clockwise rings.
template <typename Derived>
typename Derived::Scalar signed_area(const Eigen::MatrixBase<Derived>& ring) {
  using Scalar = typename Derived::Scalar;
  Scalar acc(0);
  const Eigen::Index n = ring.cols();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index j = (i + 1) % n;
    acc += ring(0, i) * ring(1, j) - ring(0, j) * ring(1, i);
  }
  return acc / Scalar(2);
}

/// Axis-aligned bounds as (min, max) columns.
Eigen::Matrix2d bounding_box(const Eigen::Matrix2Xd& pts);

/// True when the closed ring has >= 3 points and no two non-adjacent edges
/// touch. Uses an x-sorted sweep over edge extents.
bool is_simple_polygon(const Eigen::Matrix2Xd& ring);

/// Total length of the polyline (including the closing edge when closed).
double polyline_length(const Polyline2d& line);

/// Drops vertices that are exact duplicates of their predecessor or lie on
/// the segment joining their neighbours (|cross| <= tol * edge scale).
Eigen::Matrix2Xd remove_collinear(const Eigen::Matrix2Xd& ring, double tol = 1e-12);

/// Ear-clipping triangulation of a simple counter-clockwise ring.
/// Ears are taken in ascending vertex order, so output is deterministic.
/// Throws GeometryError if the ring cannot be triangulated.
std::vector<std::array<int, 3>> ear_clip(const Eigen::Matrix2Xd& ring);

}  // namespace camv
