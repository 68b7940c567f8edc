#pragma once

#include <cmath>
#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "camv/beamsteer.hpp"
#include "camv/geometry.hpp"

namespace camv {

/// Angular sampling, radians. theta ascending (default [0, pi/2]),
/// phi ascending within [0, 2 pi).
struct AngleGrid {
  Eigen::VectorXd theta;
  Eigen::VectorXd phi;

  /// theta in [0, theta_max_deg] and phi in [0, 360) at the given steps.
  static AngleGrid uniform(double theta_step_deg = 0.25, double phi_step_deg = 1.0, double theta_max_deg = 90.0);
  void validate() const;
};

enum class PatternKind { array_factor, gain_estimate, imported_embedded };

std::string to_string(PatternKind kind);

/// Sampled pattern at one frequency. Values are laid out theta-major:
/// row i is theta[i], column j is phi[j]. Exactly one of `field` (complex
/// kinds) or `gain` (linear power/gain kinds) is populated.
struct FarFieldPattern {
  AngleGrid grid;
  double frequency = 0.0;  ///< Hz, 0 when unknown (imported without metadata)
  PatternKind kind = PatternKind::array_factor;
  Eigen::MatrixXcd field;
  Eigen::MatrixXd gain;

  bool is_complex() const { return field.size() > 0; }
  /// |field|^2 or gain.
  Eigen::MatrixXd power() const;
  void validate() const;
};

/// Analytic element factor standing in for the full-wave element pattern.
struct ElementModel {
  enum class Kind { isotropic, cosine_q };
  Kind kind = Kind::cosine_q;
  double q = 1.0;

  static ElementModel isotropic() { return {Kind::isotropic, 0.0}; }
  static ElementModel cosine(double q) { return {Kind::cosine_q, q}; }

  /// Field amplitude factor; cos^q(theta) in front, 0 behind the aperture.
  double field(double theta) const;
  void validate() const;
};

/// Array factor for element positions (metres, 2 x N) and complex weights:
///   AF = sum_e w_e exp(j k (x_e sin(theta) cos(phi) + y_e sin(theta) sin(phi)))
template <typename DerivedPos, typename DerivedW>
std::complex<typename DerivedPos::Scalar> array_factor(const Eigen::MatrixBase<DerivedPos>& positions,
                                                       const Eigen::MatrixBase<DerivedW>& weights,
                                                       typename DerivedPos::Scalar wavenumber,
                                                       typename DerivedPos::Scalar theta,
                                                       typename DerivedPos::Scalar phi) {
  using Scalar = typename DerivedPos::Scalar;
  using std::cos;
  using std::sin;
  if (positions.rows() != 2 || positions.cols() != weights.size())
    throw std::invalid_argument("array_factor: positions/weights size mismatch");
  const Scalar ux = sin(theta) * cos(phi), uy = sin(theta) * sin(phi);
  std::complex<Scalar> acc(0);
  for (Eigen::Index e = 0; e < positions.cols(); ++e) {
    const Scalar arg = wavenumber * (positions(0, e) * ux + positions(1, e) * uy);
    acc += weights[e] * std::complex<Scalar>(cos(arg), sin(arg));
  }
  return acc;
}

/// Array factor of a lattice (pitches in mm) under an excitation.
std::complex<double> array_factor(const ArrayLayout& layout, const Excitation& excitation, double frequency,
                                  double theta, double phi);

/// Complex array factor over a grid (kind array_factor, unnormalized).
FarFieldPattern array_factor_pattern(const ArrayLayout& layout, const Excitation& excitation, double frequency,
                                     const AngleGrid& grid);

/// Gain estimate |AF|^2 EF^2, scaled so that the broadside excitation with
/// the same amplitudes peaks at its quadrature directivity (upper hemisphere).
FarFieldPattern compute_pattern(const ArrayLayout& layout, const Excitation& excitation, double frequency,
                                const AngleGrid& grid, const ElementModel& model = {});

/// Gain over the embedded pattern's grid: |AF|^2 G_e (gain kinds) or |AF E_e|^2
/// (complex kinds), one shared element pattern for every lattice site.
FarFieldPattern compute_pattern_embedded(const ArrayLayout& layout, const Excitation& excitation, double frequency,
                                         const FarFieldPattern& element_pattern);

// ---------------------------------------------------------------------------
// Metrics

/// Pattern samples along a plane through broadside: signed theta in rad
/// (negative side taken from phi + pi), power in dB.
struct PatternCut {
  std::string label;
  Eigen::VectorXd angle;
  Eigen::VectorXd value_db;
};

/// Cut through the pattern at azimuth `phi` (interpolated between columns
/// when phi is not a grid value). Power floored at -300 dB.
PatternCut extract_cut(const FarFieldPattern& pattern, double phi);

struct PatternMetrics {
  double peak_theta = 0.0;  ///< rad, grid maximum
  double peak_phi = 0.0;    ///< rad
  double peak_db = 0.0;     ///< 10 log10 of the peak power value
  double cut_phi = 0.0;
  double hpbw_deg = 0.0;    ///< on the cut; full cut span if the beam never drops 3 dB
  std::optional<double> sidelobe_db;  ///< relative to the cut peak, <= 0
  bool grating_lobe = false;
  std::vector<std::pair<double, double>> grating_directions;  ///< (theta, phi) rad
};

/// Secondary maxima within this many dB of the main lobe are grating lobes.
inline constexpr double kGratingLobeThresholdDb = 3.0;

PatternMetrics pattern_metrics(const FarFieldPattern& pattern, double cut_phi);

/// Great-circle angle between two directions, rad.
double angular_separation(double theta1, double phi1, double theta2, double phi2);

// ---------------------------------------------------------------------------
// Grating lobes, scanning, directivity

struct GratingLobeOnset {
  enum class Kind { bounded, unbounded, at_broadside };
  Kind kind;
  double max_scan;  ///< rad; pi/2 when unbounded, 0 at broadside
};

/// Largest grating-lobe-free scan angle of a uniform lattice with this pitch (m):
/// asin(lambda/d - 1) for 1 < lambda/d < 2.
GratingLobeOnset grating_lobe_onset(double pitch, double frequency);

struct SweepRow {
  double frequency;
  double theta0;
  double phi0;
  PatternMetrics metrics;  ///< of the gain estimate
  double beam_theta;       ///< array-factor maximum (element factor excluded)
  double beam_phi;
  PatternCut cut;          ///< gain estimate along phi0, dB
};

/// One row per (frequency, scan angle), frequency-major.
std::vector<SweepRow> scan_sweep(const ArrayLayout& layout, const std::vector<double>& frequencies,
                                 const std::vector<double>& scan_angles, double phi0, const ElementModel& model,
                                 const AngleGrid& grid = AngleGrid::uniform());

/// Single sweep entry for an arbitrary (theta0, phi0).
SweepRow scan_point(const ArrayLayout& layout, double frequency, double theta0, double phi0,
                    const ElementModel& model, const AngleGrid& grid);

struct Directivity {
  double linear;
  double dbi;
  bool hemisphere;  ///< only theta <= pi/2 was integrated
};

/// 4 pi * peak / integral(P sin(theta) dtheta dphi) by trapezoidal rules
/// (periodic in phi). Needs >= 10 samples on each axis.
Directivity directivity(const FarFieldPattern& pattern);

// ---------------------------------------------------------------------------
// CSV

/// theta_deg,phi_deg,re,im (complex kinds) or theta_deg,phi_deg,gain_linear.
/// Angles at 9 significant digits, values at 17 (lossless).
void write_pattern_csv(const FarFieldPattern& pattern, const std::filesystem::path& path);
std::string pattern_csv(const FarFieldPattern& pattern);

/// Parses a pattern CSV; throws FormatError with the offending row.
FarFieldPattern import_embedded_pattern(const std::filesystem::path& path, double frequency = 0.0);
FarFieldPattern parse_pattern_csv(const std::string& text, double frequency = 0.0);

}  // namespace camv
