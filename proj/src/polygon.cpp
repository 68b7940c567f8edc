#include "camv/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "camv/errors.hpp"

namespace camv {
namespace {

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

int orientation(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const double v = cross(b - a, c - a);
  const double scale = (b - a).norm() * (c - a).norm();
  if (std::abs(v) <= 1e-14 * scale) return 0;
  return v > 0 ? 1 : -1;
}

bool on_segment(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

bool segments_touch(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2, const Eigen::Vector2d& q1,
                    const Eigen::Vector2d& q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

bool point_in_triangle(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                       const Eigen::Vector2d& c) {
  // Closed triangle test; boundary points count as inside so that ears
  // touching another vertex are rejected.
  const double d1 = cross(b - a, p - a);
  const double d2 = cross(c - b, p - b);
  const double d3 = cross(a - c, p - c);
  return d1 >= 0 && d2 >= 0 && d3 >= 0;
}

}  // namespace

Eigen::Matrix2d bounding_box(const Eigen::Matrix2Xd& pts) {
  Eigen::Matrix2d box;
  box.col(0) = pts.rowwise().minCoeff();
  box.col(1) = pts.rowwise().maxCoeff();
  return box;
}

bool is_simple_polygon(const Eigen::Matrix2Xd& ring) {
  const Eigen::Index n = ring.cols();
  if (n < 3) return false;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  auto xmin = [&](Eigen::Index e) { return std::min(ring(0, e), ring(0, (e + 1) % n)); };
  auto xmax = [&](Eigen::Index e) { return std::max(ring(0, e), ring(0, (e + 1) % n)); };
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return xmin(a) < xmin(b) || (xmin(a) == xmin(b) && a < b);
  });

  std::vector<Eigen::Index> active;
  for (const Eigen::Index e : order) {
    const double lo = xmin(e);
    std::erase_if(active, [&](Eigen::Index a) { return xmax(a) < lo; });
    const Eigen::Vector2d p1 = ring.col(e), p2 = ring.col((e + 1) % n);
    for (const Eigen::Index a : active) {
      const bool adjacent = (a + 1) % n == e || (e + 1) % n == a;
      const Eigen::Vector2d q1 = ring.col(a), q2 = ring.col((a + 1) % n);
      if (adjacent) {
        // Neighbouring edges share one vertex; they must not fold back.
        const Eigen::Vector2d shared = (a + 1) % n == e ? p1 : p2;
        const Eigen::Vector2d far_e = (a + 1) % n == e ? p2 : p1;
        const Eigen::Vector2d far_a = (a + 1) % n == e ? q1 : q2;
        if (orientation(shared, far_e, far_a) == 0 && (far_e - shared).dot(far_a - shared) > 0) return false;
        continue;
      }
      if (segments_touch(p1, p2, q1, q2)) return false;
    }
    active.push_back(e);
  }
  return true;
}

double polyline_length(const Polyline2d& line) {
  const Eigen::Index n = line.points.cols();
  double len = 0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) len += (line.points.col(i + 1) - line.points.col(i)).norm();
  if (line.closed && n > 1) len += (line.points.col(0) - line.points.col(n - 1)).norm();
  return len;
}

Eigen::Matrix2Xd remove_collinear(const Eigen::Matrix2Xd& ring, double tol) {
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(static_cast<std::size_t>(ring.cols()));
  for (Eigen::Index i = 0; i < ring.cols(); ++i) pts.emplace_back(ring.col(i));

  bool changed = true;
  while (changed && pts.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() > 3; ++i) {
      const auto& prev = pts[(i + pts.size() - 1) % pts.size()];
      const auto& next = pts[(i + 1) % pts.size()];
      const Eigen::Vector2d a = pts[i] - prev, b = next - pts[i];
      const double scale = std::max(a.norm() * b.norm(), 1e-300);
      if (a.norm() == 0.0 || (std::abs(cross(a, b)) <= tol * scale && a.dot(b) > 0)) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  Eigen::Matrix2Xd out(2, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = pts[i];
  return out;
}

std::vector<std::array<int, 3>> ear_clip(const Eigen::Matrix2Xd& ring) {
  const int n = static_cast<int>(ring.cols());
  if (n < 3) throw GeometryError("ear_clip: ring needs at least 3 vertices");
  if (signed_area(ring) <= 0) throw GeometryError("ear_clip: ring must be counter-clockwise");

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::array<int, 3>> tris;
  tris.reserve(static_cast<std::size_t>(n - 2));

  auto is_ear = [&](std::size_t k) {
    const std::size_t m = idx.size();
    const int ia = idx[(k + m - 1) % m], ib = idx[k], ic = idx[(k + 1) % m];
    const Eigen::Vector2d a = ring.col(ia), b = ring.col(ib), c = ring.col(ic);
    // Reflex, or collinear within rounding: clipping it would emit a sliver.
    if (cross(b - a, c - b) <= 1e-10 * (b - a).norm() * (c - b).norm()) return false;
    for (std::size_t j = 0; j < m; ++j) {
      const int ip = idx[j];
      if (ip == ia || ip == ib || ip == ic) continue;
      const Eigen::Vector2d p = ring.col(ip);
      if (p == a || p == b || p == c) continue;
      if (point_in_triangle(p, a, b, c)) return false;
    }
    return true;
  };

  std::size_t k = 0;
  std::size_t misses = 0;
  while (idx.size() > 3) {
    if (k >= idx.size()) k = 0;
    if (is_ear(k)) {
      const std::size_t m = idx.size();
      tris.push_back({idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      misses = 0;
      // Restart from the previous vertex: it may have just become an ear.
      k = k == 0 ? 0 : k - 1;
    } else {
      ++k;
      if (++misses > idx.size()) throw GeometryError("ear_clip: no ear found (ring not simple?)");
    }
  }
  tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

}  // namespace camv
