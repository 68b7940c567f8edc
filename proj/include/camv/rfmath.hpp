#pragma once

#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace camv {

// Return loss is stored positive: 15 means S11 = -15 dB.

/// (1 + |G|) / (1 - |G|) for |G| in [0, 1).
template <typename Scalar = double>
Scalar vswr_from_gamma(Scalar gamma_mag) {
  if (!(gamma_mag >= Scalar(0) && gamma_mag < Scalar(1)))
    throw std::domain_error("vswr_from_gamma: |gamma| must lie in [0, 1)");
  return (Scalar(1) + gamma_mag) / (Scalar(1) - gamma_mag);
}

/// Inverse of vswr_from_gamma for vswr >= 1.
template <typename Scalar = double>
Scalar gamma_from_vswr(Scalar vswr) {
  if (!(vswr >= Scalar(1)) || !std::isfinite(vswr)) throw std::domain_error("gamma_from_vswr: vswr must be >= 1");
  return (vswr - Scalar(1)) / (vswr + Scalar(1));
}

template <typename Scalar>
struct GammaMagnitudeT {
  Scalar value;
  bool clamped;  ///< input was >= kReturnLossClampDb; value forced to 0
};
using GammaMagnitude = GammaMagnitudeT<double>;

/// Return losses at or above this are treated as a perfect match.
inline constexpr double kReturnLossClampDb = 300.0;

/// 10^(-rl/20); rl >= 0.
template <typename Scalar = double>
GammaMagnitudeT<Scalar> gamma_from_rl_db(Scalar rl_db) {
  using std::pow;
  if (!(rl_db >= Scalar(0))) throw std::domain_error("gamma_from_rl_db: return loss must be >= 0 dB");
  if (rl_db >= Scalar(kReturnLossClampDb)) return {Scalar(0), true};
  return {pow(Scalar(10), -rl_db / Scalar(20)), false};
}

/// -20 log10 |G|; +inf for a perfect match.
template <typename Scalar = double>
Scalar rl_db_from_gamma(Scalar gamma_mag) {
  using std::log10;
  if (!(gamma_mag >= Scalar(0) && gamma_mag <= Scalar(1)))
    throw std::domain_error("rl_db_from_gamma: |gamma| must lie in [0, 1]");
  return -Scalar(20) * log10(gamma_mag);
}

/// VSWR equivalent of a return-loss threshold.
double vswr_from_rl_db(double rl_db);

struct ReflectionPoint {
  double frequency;  ///< Hz
  double gamma_mag;  ///< [0, 1)

  static ReflectionPoint from_rl_db(double frequency, double rl_db);
  void validate() const;
};

struct FrequencyInterval {
  double start;  ///< Hz
  double stop;
};

/// Maximal intervals where return loss >= threshold. Crossings are
/// interpolated linearly in return-loss dB against frequency. Points must be
/// strictly ascending in frequency (>= 2 of them).
std::vector<FrequencyInterval> band_below_threshold(const std::vector<ReflectionPoint>& points, double threshold_rl_db);

/// Same bands expressed as a VSWR ceiling.
std::vector<FrequencyInterval> band_below_vswr(const std::vector<ReflectionPoint>& points, double vswr_max);

/// Two-column CSV (freq_hz,rl_db) with that header; FormatError on bad rows.
std::vector<ReflectionPoint> read_return_loss_csv(const std::filesystem::path& path);
std::vector<ReflectionPoint> parse_return_loss_csv(const std::string& text);

}  // namespace camv
