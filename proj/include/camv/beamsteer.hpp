#pragma once

#include <cmath>
#include <complex>
#include <filesystem>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

#include "camv/constants.hpp"
#include "camv/geometry.hpp"

namespace camv {

/// Free-space wavelength c/f in metres.
template <typename Scalar = double>
Scalar wavelength(Scalar frequency) {
  if (!(frequency > Scalar(0))) throw std::domain_error("wavelength: frequency must be positive");
  return Scalar(kSpeedOfLight) / frequency;
}

/// Wraps a phase into (-pi, pi].
template <typename Scalar = double>
Scalar wrap_phase(Scalar phi) {
  using std::isfinite;
  if (!isfinite(phi)) throw std::domain_error("wrap_phase: non-finite phase");
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar r = std::remainder(phi, Scalar(2) * pi);  // [-pi, pi]
  if (r <= -pi) r += Scalar(2) * pi;
  return r;
}

/// Main-beam direction and operating frequency.
template <typename Scalar>
struct SteeringCommandT {
  Scalar theta0;     ///< elevation from broadside, rad, in [0, pi/2]
  Scalar phi0;       ///< azimuth, rad
  Scalar frequency;  ///< Hz

  void validate() const {
    if (!(theta0 >= Scalar(0) && theta0 <= std::numbers::pi_v<Scalar> / Scalar(2)))
      throw std::domain_error("SteeringCommand: theta0 must lie in [0, pi/2]");
    if (!(frequency > Scalar(0))) throw std::domain_error("SteeringCommand: frequency must be positive");
  }
};
using SteeringCommand = SteeringCommandT<double>;

/// Progressive phase per element step along x and y (unwrapped), rad.
template <typename Scalar>
struct PhaseIncrementsT {
  Scalar dphi_x;
  Scalar dphi_y;
};
using PhaseIncrements = PhaseIncrementsT<double>;

/// Steering increments for pitches (m) along x and y:
///   dphi_x = -(2 pi d_x / lambda) sin(theta0) cos(phi0)
///   dphi_y = -(2 pi d_y / lambda) sin(theta0) sin(phi0)
template <typename Scalar>
PhaseIncrementsT<Scalar> phase_increments(Scalar pitch_x, Scalar pitch_y, const SteeringCommandT<Scalar>& cmd) {
  using std::cos;
  using std::sin;
  cmd.validate();
  if (!(pitch_x > Scalar(0)) || !(pitch_y > Scalar(0)))
    throw std::domain_error("phase_increments: element spacing must be positive");
  const Scalar k = Scalar(2) * std::numbers::pi_v<Scalar> / wavelength(cmd.frequency);
  const Scalar s = sin(cmd.theta0);
  return {-k * pitch_x * s * cos(cmd.phi0), -k * pitch_y * s * sin(cmd.phi0)};
}

/// Square-lattice convenience overload, spacing d in metres.
template <typename Scalar>
PhaseIncrementsT<Scalar> phase_increments(Scalar d, const SteeringCommandT<Scalar>& cmd) {
  return phase_increments(d, d, cmd);
}

/// Per-element weights, indexed by element number - 1.
struct Excitation {
  Eigen::VectorXd amplitude;  ///< linear, >= 0
  Eigen::VectorXd phase;      ///< rad, wrapped to (-pi, pi]

  Eigen::Index size() const { return amplitude.size(); }
  Eigen::VectorXcd weights() const;
  void validate() const;
};

/// Amplitude window hook; the default is uniform illumination.
using AmplitudeWindow = double (*)(int row, int col, const ArrayLayout&);
double uniform_window(int row, int col, const ArrayLayout&);

/// Linear steering phases n*dphi_x + m*dphi_y (n = row, m = column from the
/// element-1 corner), wrapped.
Excitation excitation_for(const ArrayLayout& layout, const SteeringCommand& cmd,
                          AmplitudeWindow window = &uniform_window);

/// CSV: element_index,row,col,amplitude,phase_rad,phase_deg (9 significant digits).
void write_excitation_csv(const ArrayLayout& layout, const Excitation& ex, const std::filesystem::path& path);

}  // namespace camv
