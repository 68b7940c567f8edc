#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "camv/polygon.hpp"

namespace camv {

/// Geometric parameters of one all-metal Vivaldi element, lengths in mm.
///
/// Symbol names from the design table are given next to each field.
/// The taper is described in its own frame: x runs from the aperture
/// plane (x = 0) toward the feed (x = taper_length), y is the signed
/// half-opening of the slot (negative branch).
template <typename Scalar>
struct ElementParamsT {
  Scalar aperture_width;    ///< w: width of the upper body at the aperture
  Scalar taper_mouth;       ///< w_a: full slot opening at x = 0
  Scalar taper_throat;      ///< w_t: full slot opening at x = L_s
  Scalar taper_length;      ///< L_s
  Scalar height;            ///< L: total element height
  Scalar pitch;             ///< d: element footprint / lattice pitch
  Scalar thickness;         ///< t: upper-body thickness (extrusion depth)
  Scalar base_height;       ///< h: base plate height
  Scalar slot_width;        ///< W_s: width of narrow and corrugation slots
  std::array<Scalar, 6> narrow_slots;       ///< L1..L6
  std::array<Scalar, 9> corrugation_depths; ///< Ls1..Ls9, feed side first
  Scalar design_frequency;  ///< Hz

  template <typename Other>
  ElementParamsT<Other> cast() const {
    ElementParamsT<Other> o{};
    o.aperture_width = Other(aperture_width);
    o.taper_mouth = Other(taper_mouth);
    o.taper_throat = Other(taper_throat);
    o.taper_length = Other(taper_length);
    o.height = Other(height);
    o.pitch = Other(pitch);
    o.thickness = Other(thickness);
    o.base_height = Other(base_height);
    o.slot_width = Other(slot_width);
    for (std::size_t i = 0; i < narrow_slots.size(); ++i) o.narrow_slots[i] = Other(narrow_slots[i]);
    for (std::size_t i = 0; i < corrugation_depths.size(); ++i)
      o.corrugation_depths[i] = Other(corrugation_depths[i]);
    o.design_frequency = Other(design_frequency);
    return o;
  }
};

using ElementParams = ElementParamsT<double>;

/// Reference CAMV element (preset "camv-table1"), 28 GHz design frequency.
ElementParams camv_table1();

// ---------------------------------------------------------------------------
// Exponential taper

/// Exponent rate of the taper, ln(w_t / w_a) / L_s (negative for a narrowing slot).
template <typename Scalar>
Scalar taper_rate(const ElementParamsT<Scalar>& p) {
  using std::log;
  return log(p.taper_throat / p.taper_mouth) / p.taper_length;
}

/// y(x) = -(w_a/2) * exp(ln(w_t/w_a) * x / L_s) for x in [0, L_s].
/// Throws std::domain_error outside that interval.
template <typename Scalar>
Scalar taper_halfwidth(const ElementParamsT<Scalar>& p, Scalar x) {
  using std::exp;
  if (!(x >= Scalar(0) && x <= p.taper_length))
    throw std::domain_error("taper_halfwidth: x outside [0, L_s]");
  return -(p.taper_mouth / Scalar(2)) * exp(taper_rate(p) * x);
}

/// Analytic dy/dx of the taper curve.
template <typename Scalar>
Scalar taper_slope(const ElementParamsT<Scalar>& p, Scalar x) {
  return taper_halfwidth(p, x) * taper_rate(p);
}

/// Uniformly sampled taper curve in the taper frame; n_samples >= 2.
Polyline2d taper_curve(const ElementParams& p, std::size_t n_samples);

/// Arc length of the taper edge, integrated over a dense polyline.
double taper_arc_length(const ElementParams& p, std::size_t n_samples = 4096);

// ---------------------------------------------------------------------------
// Element outline

/// One corrugation slot cut into the left flare of the element outline.
///
/// Positions are in the element frame: u lateral (centered), v up from the
/// base, aperture plane at v = L.
struct CorrugationSlot {
  int index;                 ///< 1..9, 1 nearest the feed
  double arc_station;        ///< arc length from the aperture edge to the slot center, mm
  Eigen::Vector2d center;    ///< slot mouth center on the taper edge
  Eigen::Vector2d direction; ///< unit cut direction into the metal
  double width;              ///< W_s
  double depth;              ///< nominal depth Ls_k
  double effective_depth;    ///< depth actually cut, limited by available metal

  bool clipped() const { return effective_depth < depth; }
};

struct ProfileOptions {
  std::size_t taper_samples = 256;
  /// Minimum metal left between a corrugation slot bottom and the outer edge.
  double min_web = 0.2;
};

/// Nine slots at uniform arc-length stations along the corrugated taper edge.
/// Throws GeometryError when the slots cannot be placed without overlap.
std::vector<CorrugationSlot> corrugation_slots(const ElementParams& p,
                                               const ProfileOptions& opts = {});

/// Closed, counter-clockwise outline of the element cross-section.
///
/// Base plate d x h, upper body w x (L - h), the exponential taper cut down
/// from the aperture, a throat slotline of width w_t crossed by the six
/// narrow slots, and optionally the nine corrugation slots.
Polyline2d element_profile(const ElementParams& p, bool corrugated,
                           const ProfileOptions& opts = {});

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;    ///< invariant violations; block construction
  std::vector<ValidationIssue> warnings;  ///< design-rule advisories
  std::vector<ValidationIssue> notes;     ///< informational (e.g. clipped corrugation depths)

  bool ok() const { return errors.empty(); }
};

struct ValidationOptions {
  /// L_s is flagged when outside [lo, hi] x lambda/4 at the design frequency.
  double taper_factor_lo = 0.5;
  double taper_factor_hi = 2.0;
};

ValidationReport validate_params(const ElementParams& p, const ValidationOptions& opts = {});

/// Throws GeometryError carrying the first error of validate_params.
void require_valid(const ElementParams& p);

// ---------------------------------------------------------------------------
// Array lattice

/// Rectangular lattice. Rows are stacked along x (pitch_x), columns along y
/// (pitch_y). Elements are numbered 1..rows*cols in row-major order starting
/// at the (min x, min y) corner.
struct ArrayLayout {
  int rows = 4;
  int cols = 4;
  double pitch_x = 6.46;  ///< mm
  double pitch_y = 6.46;  ///< mm

  int size() const { return rows * cols; }
  int element_number(int row, int col) const;
  std::pair<int, int> row_col(int element_number) const;
  void validate() const;
};

/// Element centers (mm) centered on the origin; column k-1 holds element k.
Eigen::Matrix2Xd array_lattice(const ArrayLayout& layout);

/// Overall footprint (rows * pitch_x, cols * pitch_y) in mm.
Eigen::Vector2d array_footprint(const ArrayLayout& layout);

}  // namespace camv
