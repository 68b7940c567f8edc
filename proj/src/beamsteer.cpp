#include "camv/beamsteer.hpp"

#include <string>

#include "camv/textio.hpp"

namespace camv {

Eigen::VectorXcd Excitation::weights() const {
  Eigen::VectorXcd w(amplitude.size());
  for (Eigen::Index i = 0; i < amplitude.size(); ++i) w[i] = std::polar(amplitude[i], phase[i]);
  return w;
}

void Excitation::validate() const {
  if (amplitude.size() != phase.size()) throw std::invalid_argument("Excitation: amplitude/phase length mismatch");
  for (Eigen::Index i = 0; i < amplitude.size(); ++i) {
    if (!std::isfinite(amplitude[i]) || amplitude[i] < 0.0)
      throw std::domain_error("Excitation: amplitudes must be finite and >= 0");
    if (!std::isfinite(phase[i]) || phase[i] <= -std::numbers::pi || phase[i] > std::numbers::pi)
      throw std::domain_error("Excitation: phases must be wrapped to (-pi, pi]");
  }
}

double uniform_window(int, int, const ArrayLayout&) { return 1.0; }

Excitation excitation_for(const ArrayLayout& layout, const SteeringCommand& cmd, AmplitudeWindow window) {
  layout.validate();
  const PhaseIncrements inc = phase_increments(layout.pitch_x * 1e-3, layout.pitch_y * 1e-3, cmd);
  Excitation ex;
  ex.amplitude.resize(layout.size());
  ex.phase.resize(layout.size());
  for (int n = 0; n < layout.rows; ++n) {
    for (int m = 0; m < layout.cols; ++m) {
      const int k = layout.element_number(n, m) - 1;
      ex.amplitude[k] = window(n, m, layout);
      ex.phase[k] = wrap_phase(n * inc.dphi_x + m * inc.dphi_y);
    }
  }
  return ex;
}

void write_excitation_csv(const ArrayLayout& layout, const Excitation& ex, const std::filesystem::path& path) {
  if (ex.size() != layout.size()) throw std::invalid_argument("write_excitation_csv: excitation/layout size mismatch");
  std::string out = "element_index,row,col,amplitude,phase_rad,phase_deg\n";
  for (int k = 1; k <= layout.size(); ++k) {
    const auto [row, col] = layout.row_col(k);
    const double ph = ex.phase[k - 1];
    out += std::to_string(k) + ',' + std::to_string(row) + ',' + std::to_string(col) + ',' +
           format_number(ex.amplitude[k - 1]) + ',' + format_number(ph) + ',' + format_number(rad2deg(ph)) + '\n';
  }
  write_file_atomic(path, out);
}

}  // namespace camv
