#include "camv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "camv/beamsteer.hpp"
#include "camv/errors.hpp"

namespace camv {

ElementParams camv_table1() {
  ElementParams p{};
  p.aperture_width = 5.7;
  p.taper_mouth = 4.75;
  p.taper_throat = 0.45;
  p.taper_length = 7.6;
  p.height = 14.25;
  p.pitch = 6.46;
  p.thickness = 2.28;
  p.base_height = 2.0;
  p.slot_width = 0.4;
  p.narrow_slots = {2.66, 1.0, 2.0, 1.15, 2.0, 0.8};
  p.corrugation_depths = {1.0, 1.5, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5};
  p.design_frequency = 28e9;
  return p;
}

namespace {

// Cumulative arc length of the taper edge over a dense uniform-x sampling,
// used to place features at prescribed arc-length stations.
class ArcTable {
 public:
  ArcTable(const ElementParams& p, std::size_t n) : x_(n), s_(n) {
    const double ls = p.taper_length;
    double prev_y = taper_halfwidth(p, 0.0);
    s_[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x_[i] = i + 1 == n ? ls : ls * double(i) / double(n - 1);
      const double y = taper_halfwidth(p, x_[i]);
      if (i > 0) s_[i] = s_[i - 1] + std::hypot(x_[i] - x_[i - 1], y - prev_y);
      prev_y = y;
    }
  }

  double total() const { return s_.back(); }

  double x_at(double s) const {
    if (s <= 0) return 0.0;
    if (s >= total()) return x_.back();
    const auto it = std::upper_bound(s_.begin(), s_.end(), s);
    const auto i = static_cast<std::size_t>(it - s_.begin());
    const double f = (s - s_[i - 1]) / (s_[i] - s_[i - 1]);
    return x_[i - 1] + f * (x_[i] - x_[i - 1]);
  }

 private:
  std::vector<double> x_, s_;
};

constexpr std::size_t kArcSamples = 4096;

double narrow_slot_end(const ElementParams& p) {
  return p.taper_length + (2.0 * double(p.narrow_slots.size()) - 1.0) * p.slot_width;
}

// Element-frame point on the left (corrugated) taper edge.
Eigen::Vector2d left_edge(const ElementParams& p, double x) {
  return {taper_halfwidth(p, x), p.height - x};
}

std::string mm(double v) { return fmt::format("{:.4g} mm", v); }

}  // namespace

Polyline2d taper_curve(const ElementParams& p, std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("taper_curve: n_samples must be >= 2");
  Polyline2d line;
  line.closed = false;
  line.points.resize(2, static_cast<Eigen::Index>(n_samples));
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = i + 1 == n_samples ? p.taper_length : p.taper_length * double(i) / double(n_samples - 1);
    line.points.col(static_cast<Eigen::Index>(i)) << x, taper_halfwidth(p, x);
  }
  return line;
}

double taper_arc_length(const ElementParams& p, std::size_t n_samples) {
  return ArcTable(p, std::max<std::size_t>(n_samples, 2)).total();
}

std::vector<CorrugationSlot> corrugation_slots(const ElementParams& p, const ProfileOptions& opts) {
  require_valid(p);
  const ArcTable arc(p, kArcSamples);
  const double edge = arc.total();
  const std::size_t count = p.corrugation_depths.size();
  const double spacing = edge / double(count);
  if (p.slot_width >= spacing) {
    throw GeometryError(fmt::format("corrugation slots overlap: {} slots of width {} need more than the {} taper edge",
                                    count, mm(p.slot_width), mm(edge)));
  }

  const double rate = taper_rate(p);
  const double half_body = p.aperture_width / 2.0;
  std::vector<CorrugationSlot> slots;
  slots.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int index = static_cast<int>(i) + 1;
    // Slot 1 sits nearest the feed, i.e. furthest along the edge from the aperture.
    const double station = spacing * (double(count - i) - 0.5);
    const double xc = arc.x_at(station);
    const double xa = arc.x_at(station - p.slot_width / 2.0);
    const double xb = arc.x_at(station + p.slot_width / 2.0);

    CorrugationSlot s{};
    s.index = index;
    s.arc_station = station;
    s.center = left_edge(p, xc);
    // Inward normal of the left edge: outward in u, slightly toward the feed.
    s.direction = Eigen::Vector2d(-1.0, rate * std::abs(s.center.x())).normalized();
    s.width = p.slot_width;
    s.depth = p.corrugation_depths[i];

    const double lateral = -s.direction.x();
    double room = std::numeric_limits<double>::infinity();
    for (const double x : {xa, xb}) {
      const double u = std::abs(taper_halfwidth(p, x));
      room = std::min(room, (half_body - opts.min_web - u) / lateral);
    }
    if (room <= 0.0) {
      throw GeometryError(fmt::format("corrugation slot {} has no room between the taper edge and the body edge", index));
    }
    s.effective_depth = std::min(s.depth, room);
    slots.push_back(s);
  }
  return slots;
}

Polyline2d element_profile(const ElementParams& p, bool corrugated, const ProfileOptions& opts) {
  require_valid(p);
  if (opts.taper_samples < 2) throw std::invalid_argument("element_profile: taper_samples must be >= 2");

  const double d2 = p.pitch / 2.0, w2 = p.aperture_width / 2.0;
  const double L = p.height, h = p.base_height, ws = p.slot_width;
  const double throat = p.taper_throat / 2.0;
  const std::size_t n = opts.taper_samples;
  auto sample_x = [&](std::size_t i) { return i + 1 == n ? p.taper_length : p.taper_length * double(i) / double(n - 1); };

  std::vector<Eigen::Vector2d> pts;
  pts.reserve(n * 2 + 64);
  pts.emplace_back(-d2, 0.0);
  pts.emplace_back(d2, 0.0);
  pts.emplace_back(d2, h);
  pts.emplace_back(w2, h);
  pts.emplace_back(w2, L);

  // Right flare edge, aperture down to the throat.
  for (std::size_t i = 0; i < n; ++i) {
    const double x = sample_x(i);
    pts.emplace_back(-taper_halfwidth(p, x), L - x);
  }

  // Throat slotline crossed by the narrow slots; each slot is W_s tall and
  // separated from the next by W_s.
  const std::size_t nslots = p.narrow_slots.size();
  for (std::size_t k = 0; k < nslots; ++k) {
    const double top = L - p.taper_length - 2.0 * double(k) * ws;
    const double bottom = top - ws;
    const double half = p.narrow_slots[k] / 2.0;
    if (k > 0) pts.emplace_back(throat, top);
    pts.emplace_back(half, top);
    pts.emplace_back(half, bottom);
    if (k + 1 < nslots) pts.emplace_back(throat, bottom);
  }
  for (std::size_t kk = nslots; kk-- > 0;) {
    const double top = L - p.taper_length - 2.0 * double(kk) * ws;
    const double bottom = top - ws;
    const double half = p.narrow_slots[kk] / 2.0;
    if (kk + 1 < nslots) pts.emplace_back(-throat, bottom);
    pts.emplace_back(-half, bottom);
    pts.emplace_back(-half, top);
    if (kk > 0) pts.emplace_back(-throat, top);
  }

  // Left flare edge, throat up to the aperture, with corrugations.
  std::vector<CorrugationSlot> slots;
  if (corrugated) slots = corrugation_slots(p, opts);
  const ArcTable arc(p, kArcSamples);
  std::size_t next_slot = 0;  // slots are ordered feed -> aperture, same as this walk
  double skip_until = -1.0;   // samples with x > skip_until are inside a slot mouth
  for (std::size_t i = n; i-- > 0;) {
    const double x = sample_x(i);
    while (next_slot < slots.size()) {
      const auto& s = slots[next_slot];
      const double xa = arc.x_at(s.arc_station - s.width / 2.0);
      const double xb = arc.x_at(s.arc_station + s.width / 2.0);
      if (x > xb) break;
      const Eigen::Vector2d pa = left_edge(p, xa), pb = left_edge(p, xb);
      const Eigen::Vector2d cut = s.direction * s.effective_depth;
      pts.push_back(pb);
      pts.push_back(pb + cut);
      pts.push_back(pa + cut);
      pts.push_back(pa);
      skip_until = xa;
      ++next_slot;
    }
    if (skip_until >= 0.0 && x >= skip_until - 1e-9) continue;
    pts.push_back(left_edge(p, x));
  }

  pts.emplace_back(-w2, L);
  pts.emplace_back(-w2, h);
  pts.emplace_back(-d2, h);

  Eigen::Matrix2Xd ring(2, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) ring.col(static_cast<Eigen::Index>(i)) = pts[i];
  ring = remove_collinear(ring);

  if (signed_area(ring) <= 0.0 || !is_simple_polygon(ring)) {
    throw GeometryError("element_profile: outline self-intersects; check slot sizes against the body");
  }
  return Polyline2d{std::move(ring), true};
}

namespace {

void check_invariants(const ElementParams& p, ValidationReport& r) {
  auto error = [&](std::string code, std::string msg) { r.errors.push_back({std::move(code), std::move(msg)}); };

  const std::pair<const char*, double> lengths[] = {
      {"w", p.aperture_width}, {"w_a", p.taper_mouth}, {"w_t", p.taper_throat}, {"L_s", p.taper_length},
      {"L", p.height},         {"d", p.pitch},         {"t", p.thickness},      {"h", p.base_height},
      {"W_s", p.slot_width}};
  for (const auto& [name, v] : lengths) {
    if (!(v > 0.0) || !std::isfinite(v)) error(fmt::format("{}>0", name), fmt::format("{} must be positive, got {}", name, v));
  }
  for (std::size_t i = 0; i < p.narrow_slots.size(); ++i) {
    if (!(p.narrow_slots[i] > 0.0)) error(fmt::format("L{}>0", i + 1), fmt::format("L{} must be positive", i + 1));
  }
  for (std::size_t i = 0; i < p.corrugation_depths.size(); ++i) {
    if (!(p.corrugation_depths[i] > 0.0))
      error(fmt::format("Ls{}>0", i + 1), fmt::format("Ls{} must be positive", i + 1));
  }
  if (!(p.design_frequency > 0.0)) error("f_design>0", "design frequency must be positive");
  if (!r.errors.empty()) return;

  if (!(p.taper_throat < p.taper_mouth))
    error("w_t<w_a", fmt::format("w_t < w_a violated: w_t = {}, w_a = {}", mm(p.taper_throat), mm(p.taper_mouth)));
  if (!(p.taper_mouth <= p.aperture_width))
    error("w_a<=w", fmt::format("w_a <= w violated: w_a = {}, w = {}", mm(p.taper_mouth), mm(p.aperture_width)));
  if (!(p.aperture_width <= p.pitch))
    error("w<=d", fmt::format("w <= d violated: w = {}, d = {}", mm(p.aperture_width), mm(p.pitch)));
  if (!(p.taper_length < p.height))
    error("L_s<L", fmt::format("L_s < L violated: L_s = {}, L = {}", mm(p.taper_length), mm(p.height)));
  if (!(p.base_height + p.taper_length <= p.height))
    error("h+L_s<=L", fmt::format("h + L_s <= L violated: h + L_s = {}, L = {}", mm(p.base_height + p.taper_length),
                                  mm(p.height)));
  for (std::size_t i = 1; i < p.corrugation_depths.size(); ++i) {
    if (p.corrugation_depths[i] < p.corrugation_depths[i - 1]) {
      error("Ls_monotone", fmt::format("Ls{} <= Ls{} violated: corrugation depths must be non-decreasing", i, i + 1));
      break;
    }
  }
  for (std::size_t i = 0; i < p.narrow_slots.size(); ++i) {
    const double len = p.narrow_slots[i];
    if (!(len > p.taper_throat && len < p.aperture_width))
      error(fmt::format("w_t<L{}<w", i + 1),
            fmt::format("narrow slot L{} = {} must lie strictly between w_t and w", i + 1, mm(len)));
  }
  if (!(narrow_slot_end(p) < p.height))
    error("narrow_slots_fit",
          fmt::format("narrow slots end {} below the aperture, past the element height", mm(narrow_slot_end(p))));

}

}  // namespace

ValidationReport validate_params(const ElementParams& p, const ValidationOptions& opts) {
  ValidationReport r;
  check_invariants(p, r);
  if (!r.errors.empty()) return r;

  const double lambda_mm = wavelength(p.design_frequency) * 1e3;
  const double ghz = p.design_frequency / 1e9;
  if (p.pitch > lambda_mm / 2.0) {
    r.warnings.push_back({"d<=lambda/2", fmt::format("d = {} > lambda/2 = {} at {:.6g} GHz", mm(p.pitch),
                                                     mm(lambda_mm / 2.0), ghz)});
  }
  const double quarter = lambda_mm / 4.0;
  const double ratio = p.taper_length / quarter;
  if (ratio < opts.taper_factor_lo || ratio > opts.taper_factor_hi) {
    r.warnings.push_back({"L_s~lambda/4", fmt::format("L_s = {} vs lambda/4 = {} at {:.6g} GHz (ratio {:.3g})",
                                                      mm(p.taper_length), mm(quarter), ghz, ratio)});
  }

  try {
    for (const auto& s : corrugation_slots(p)) {
      if (s.clipped())
        r.notes.push_back({fmt::format("Ls{}_clipped", s.index),
                           fmt::format("corrugation slot {} cut to {} of nominal {} (body edge)", s.index,
                                       mm(s.effective_depth), mm(s.depth))});
    }
  } catch (const GeometryError& e) {
    r.errors.push_back({"corrugation", e.what()});
  }
  return r;
}

void require_valid(const ElementParams& p) {
  ValidationReport r;
  check_invariants(p, r);
  if (!r.errors.empty()) throw GeometryError(r.errors.front().message);
}

int ArrayLayout::element_number(int row, int col) const {
  if (row < 0 || row >= rows || col < 0 || col >= cols) throw std::out_of_range("ArrayLayout: (row, col) out of range");
  return row * cols + col + 1;
}

std::pair<int, int> ArrayLayout::row_col(int element_number) const {
  if (element_number < 1 || element_number > size()) throw std::out_of_range("ArrayLayout: element number out of range");
  return {(element_number - 1) / cols, (element_number - 1) % cols};
}

void ArrayLayout::validate() const {
  if (rows < 1 || cols < 1) throw std::invalid_argument("ArrayLayout: rows and cols must be >= 1");
  if (!(pitch_x > 0.0) || !(pitch_y > 0.0)) throw std::invalid_argument("ArrayLayout: pitches must be positive");
}

Eigen::Matrix2Xd array_lattice(const ArrayLayout& layout) {
  layout.validate();
  Eigen::Matrix2Xd c(2, layout.size());
  const double r0 = (layout.rows - 1) / 2.0, c0 = (layout.cols - 1) / 2.0;
  for (int r = 0; r < layout.rows; ++r) {
    for (int k = 0; k < layout.cols; ++k) {
      c.col(layout.element_number(r, k) - 1) << (r - r0) * layout.pitch_x, (k - c0) * layout.pitch_y;
    }
  }
  return c;
}

Eigen::Vector2d array_footprint(const ArrayLayout& layout) {
  layout.validate();
  return {layout.rows * layout.pitch_x, layout.cols * layout.pitch_y};
}

}  // namespace camv
