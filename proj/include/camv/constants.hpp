#pragma once

#include <numbers>

namespace camv {

/// Speed of light in vacuum, m/s (exact by SI definition).
inline constexpr double kSpeedOfLight = 299'792'458.0;

template <typename Scalar = double>
constexpr Scalar deg2rad(Scalar deg) {
  return deg * std::numbers::pi_v<Scalar> / Scalar(180);
}

template <typename Scalar = double>
constexpr Scalar rad2deg(Scalar rad) {
  return rad * Scalar(180) / std::numbers::pi_v<Scalar>;
}

}  // namespace camv
