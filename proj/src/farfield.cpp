#include "camv/farfield.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Geometry>
#include <fmt/format.h>

#include "camv/errors.hpp"
#include "camv/textio.hpp"

namespace camv {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

// Complex AF over the grid for element positions in metres.
Eigen::MatrixXcd af_grid(const Eigen::Matrix2Xd& pos, const Eigen::VectorXcd& w, double k, const AngleGrid& g) {
  const Eigen::Index nt = g.theta.size(), np = g.phi.size();
  Eigen::Matrix2Xd dirs(2, np);
  for (Eigen::Index j = 0; j < np; ++j) dirs.col(j) << std::cos(g.phi[j]), std::sin(g.phi[j]);
  const Eigen::MatrixXd proj = pos.transpose() * dirs;  // N x np

  Eigen::MatrixXcd out(nt, np);
  for (Eigen::Index i = 0; i < nt; ++i) {
    const double ks = k * std::sin(g.theta[i]);
    for (Eigen::Index j = 0; j < np; ++j) {
      std::complex<double> acc(0.0);
      for (Eigen::Index e = 0; e < pos.cols(); ++e) {
        const double arg = ks * proj(e, j);
        acc += w[e] * std::complex<double>(std::cos(arg), std::sin(arg));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Eigen::Matrix2Xd positions_m(const ArrayLayout& layout) { return array_lattice(layout) * 1e-3; }

double wavenumber(double frequency) { return 2.0 * kPi / wavelength(frequency); }

Eigen::VectorXd theta_weights(const Eigen::VectorXd& t) {
  const Eigen::Index n = t.size();
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lo = i == 0 ? t[0] : t[i - 1];
    const double hi = i + 1 == n ? t[n - 1] : t[i + 1];
    w[i] = (hi - lo) / 2.0;
  }
  return w;
}

Eigen::VectorXd phi_weights(const Eigen::VectorXd& p) {
  const Eigen::Index n = p.size();
  Eigen::VectorXd w(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double lo = j == 0 ? p[n - 1] - kTwoPi : p[j - 1];
    const double hi = j + 1 == n ? p[0] + kTwoPi : p[j + 1];
    w[j] = (hi - lo) / 2.0;
  }
  return w;
}

// Trapezoidal integral of P sin(theta) over the grid, fixed summation order.
double power_integral(const Eigen::MatrixXd& P, const AngleGrid& g) {
  const Eigen::VectorXd wt = theta_weights(g.theta);
  const Eigen::VectorXd wp = phi_weights(g.phi);
  double total = 0.0;
  for (Eigen::Index i = 0; i < P.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < P.cols(); ++j) row += wp[j] * P(i, j);
    total += wt[i] * std::sin(g.theta[i]) * row;
  }
  return total;
}

Eigen::VectorXd element_power(const ElementModel& model, const Eigen::VectorXd& theta) {
  Eigen::VectorXd ef(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    const double f = model.field(theta[i]);
    ef[i] = f * f;
  }
  return ef;
}

// 4 pi / integral of the broadside pattern with the same amplitudes.
double gain_scale(const Eigen::Matrix2Xd& pos, const Eigen::VectorXd& amplitude, double k, const ElementModel& model) {
  static const AngleGrid ref = AngleGrid::uniform(0.25, 1.0, 90.0);
  const Eigen::MatrixXcd af = af_grid(pos, amplitude.cast<std::complex<double>>(), k, ref);
  const Eigen::MatrixXd p = af.cwiseAbs2().array().colwise() * element_power(model, ref.theta).array();
  const double integral = power_integral(p, ref);
  if (!(integral > 0.0)) throw DegeneratePatternError("compute_pattern: excitation radiates no power");
  return 4.0 * kPi / integral;
}

std::pair<Eigen::Index, Eigen::Index> argmax(const Eigen::MatrixXd& m) {
  Eigen::Index bi = 0, bj = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) > best) {
        best = m(i, j);
        bi = i;
        bj = j;
      }
  return {bi, bj};
}

// Power column at azimuth phi, interpolated periodically when off-grid.
Eigen::VectorXd power_column(const Eigen::MatrixXd& P, const Eigen::VectorXd& phis, double phi) {
  const double target = wrap_2pi(phi);
  const Eigen::Index n = phis.size();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double diff = std::abs(std::remainder(phis[j] - target, kTwoPi));
    if (diff < 1e-9) return P.col(j);
  }
  Eigen::Index hi = 0;
  while (hi < n && wrap_2pi(phis[hi]) < target) ++hi;
  const Eigen::Index lo = (hi + n - 1) % n;
  hi %= n;
  double a = wrap_2pi(phis[lo]), b = wrap_2pi(phis[hi]);
  double t = target;
  if (b <= a) {
    b += kTwoPi;
    if (t < a) t += kTwoPi;
  }
  const double f = (t - a) / (b - a);
  return (1.0 - f) * P.col(lo) + f * P.col(hi);
}

double to_db(double p) { return 10.0 * std::log10(std::max(p, 1e-30)); }

}  // namespace

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::array_factor: return "array_factor";
    case PatternKind::gain_estimate: return "gain_estimate";
    case PatternKind::imported_embedded: return "imported_embedded";
  }
  return "unknown";
}

AngleGrid AngleGrid::uniform(double theta_step_deg, double phi_step_deg, double theta_max_deg) {
  if (!(theta_step_deg > 0.0) || !(phi_step_deg > 0.0) || !(theta_max_deg > 0.0))
    throw std::invalid_argument("AngleGrid::uniform: steps and theta_max must be positive");
  const auto nt = static_cast<Eigen::Index>(std::floor(theta_max_deg / theta_step_deg + 1e-9)) + 1;
  const auto np = static_cast<Eigen::Index>(std::ceil(360.0 / phi_step_deg - 1e-9));
  AngleGrid g;
  g.theta.resize(nt);
  g.phi.resize(np);
  for (Eigen::Index i = 0; i < nt; ++i) g.theta[i] = deg2rad(double(i) * theta_step_deg);
  for (Eigen::Index j = 0; j < np; ++j) g.phi[j] = deg2rad(double(j) * phi_step_deg);
  g.validate();
  return g;
}

void AngleGrid::validate() const {
  if (theta.size() < 2 || phi.size() < 2) throw std::invalid_argument("AngleGrid: need >= 2 samples per axis");
  for (Eigen::Index i = 1; i < theta.size(); ++i)
    if (!(theta[i] > theta[i - 1])) throw std::invalid_argument("AngleGrid: theta must be strictly ascending");
  for (Eigen::Index j = 1; j < phi.size(); ++j)
    if (!(phi[j] > phi[j - 1])) throw std::invalid_argument("AngleGrid: phi must be strictly ascending");
  if (!theta.allFinite() || !phi.allFinite()) throw std::invalid_argument("AngleGrid: non-finite angle");
}

Eigen::MatrixXd FarFieldPattern::power() const {
  if (is_complex()) return field.cwiseAbs2();
  return gain;
}

void FarFieldPattern::validate() const {
  grid.validate();
  const Eigen::Index nt = grid.theta.size(), np = grid.phi.size();
  if ((field.size() > 0) == (gain.size() > 0))
    throw std::invalid_argument("FarFieldPattern: exactly one of field/gain must be set");
  if (is_complex()) {
    if (field.rows() != nt || field.cols() != np) throw std::invalid_argument("FarFieldPattern: field shape mismatch");
    if (!field.allFinite()) throw std::domain_error("FarFieldPattern: non-finite field value");
  } else {
    if (gain.rows() != nt || gain.cols() != np) throw std::invalid_argument("FarFieldPattern: gain shape mismatch");
    if (!gain.allFinite() || (gain.array() < 0.0).any())
      throw std::domain_error("FarFieldPattern: gain values must be finite and >= 0");
  }
}

double ElementModel::field(double theta) const {
  if (kind == Kind::isotropic) return 1.0;
  if (theta >= kPi / 2.0) return 0.0;
  return std::pow(std::cos(theta), q);
}

void ElementModel::validate() const {
  if (kind == Kind::cosine_q && !(std::isfinite(q) && q >= 0.0))
    throw std::invalid_argument("ElementModel: cosine exponent q must be finite and >= 0");
}

std::complex<double> array_factor(const ArrayLayout& layout, const Excitation& excitation, double frequency,
                                  double theta, double phi) {
  if (excitation.size() != layout.size()) throw std::invalid_argument("array_factor: excitation/layout size mismatch");
  return array_factor(positions_m(layout), excitation.weights(), wavenumber(frequency), theta, phi);
}

FarFieldPattern array_factor_pattern(const ArrayLayout& layout, const Excitation& excitation, double frequency,
                                     const AngleGrid& grid) {
  if (excitation.size() != layout.size())
    throw std::invalid_argument("array_factor_pattern: excitation/layout size mismatch");
  grid.validate();
  FarFieldPattern p;
  p.grid = grid;
  p.frequency = frequency;
  p.kind = PatternKind::array_factor;
  p.field = af_grid(positions_m(layout), excitation.weights(), wavenumber(frequency), grid);
  return p;
}

FarFieldPattern compute_pattern(const ArrayLayout& layout, const Excitation& excitation, double frequency,
                                const AngleGrid& grid, const ElementModel& model) {
  model.validate();
  if (excitation.size() != layout.size()) throw std::invalid_argument("compute_pattern: excitation/layout size mismatch");
  grid.validate();
  const Eigen::Matrix2Xd pos = positions_m(layout);
  const double k = wavenumber(frequency);
  const Eigen::MatrixXcd af = af_grid(pos, excitation.weights(), k, grid);

  FarFieldPattern p;
  p.grid = grid;
  p.frequency = frequency;
  p.kind = PatternKind::gain_estimate;
  p.gain = gain_scale(pos, excitation.amplitude, k, model) *
           (af.cwiseAbs2().array().colwise() * element_power(model, grid.theta).array()).matrix();
  return p;
}

FarFieldPattern compute_pattern_embedded(const ArrayLayout& layout, const Excitation& excitation, double frequency,
                                         const FarFieldPattern& element_pattern) {
  element_pattern.validate();
  if (excitation.size() != layout.size())
    throw std::invalid_argument("compute_pattern_embedded: excitation/layout size mismatch");
  const Eigen::MatrixXcd af =
      af_grid(positions_m(layout), excitation.weights(), wavenumber(frequency), element_pattern.grid);
  FarFieldPattern p;
  p.grid = element_pattern.grid;
  p.frequency = frequency;
  p.kind = PatternKind::gain_estimate;
  if (element_pattern.is_complex())
    p.gain = af.cwiseProduct(element_pattern.field).cwiseAbs2();
  else
    p.gain = af.cwiseAbs2().cwiseProduct(element_pattern.gain);
  return p;
}

PatternCut extract_cut(const FarFieldPattern& pattern, double phi) {
  pattern.validate();
  const Eigen::MatrixXd P = pattern.power();
  const Eigen::VectorXd front = power_column(P, pattern.grid.phi, phi);
  const Eigen::VectorXd back = power_column(P, pattern.grid.phi, phi + kPi);
  const Eigen::VectorXd& th = pattern.grid.theta;

  std::vector<double> ang, val;
  for (Eigen::Index i = th.size(); i-- > 0;) {
    if (th[i] <= 0.0) continue;
    ang.push_back(-th[i]);
    val.push_back(to_db(back[i]));
  }
  for (Eigen::Index i = 0; i < th.size(); ++i) {
    ang.push_back(th[i]);
    val.push_back(to_db(front[i]));
  }
  PatternCut cut;
  cut.angle = Eigen::Map<const Eigen::VectorXd>(ang.data(), static_cast<Eigen::Index>(ang.size()));
  cut.value_db = Eigen::Map<const Eigen::VectorXd>(val.data(), static_cast<Eigen::Index>(val.size()));
  return cut;
}

PatternMetrics pattern_metrics(const FarFieldPattern& pattern, double cut_phi) {
  pattern.validate();
  const Eigen::MatrixXd P = pattern.power();
  if (!(P.maxCoeff() > 0.0)) throw DegeneratePatternError("pattern_metrics: pattern is identically zero");

  PatternMetrics m;
  const auto [bi, bj] = argmax(P);
  m.peak_theta = pattern.grid.theta[bi];
  m.peak_phi = pattern.grid.phi[bj];
  m.peak_db = to_db(P(bi, bj));
  m.cut_phi = cut_phi;

  const PatternCut cut = extract_cut(pattern, cut_phi);
  const Eigen::VectorXd& a = cut.angle;
  const Eigen::VectorXd& v = cut.value_db;
  const Eigen::Index n = v.size();
  Eigen::Index i0 = 0;
  v.maxCoeff(&i0);
  const double peak = v[i0];
  const double half = peak + 10.0 * std::log10(0.5);

  // Half-power crossings, linear in dB between bracketing samples.
  double left = a[0], right = a[n - 1];
  for (Eigen::Index i = i0; i > 0; --i) {
    if (v[i - 1] < half) {
      left = a[i - 1] + (half - v[i - 1]) / (v[i] - v[i - 1]) * (a[i] - a[i - 1]);
      break;
    }
  }
  for (Eigen::Index i = i0; i + 1 < n; ++i) {
    if (v[i + 1] < half) {
      right = a[i] + (v[i] - half) / (v[i] - v[i + 1]) * (a[i + 1] - a[i]);
      break;
    }
  }
  m.hpbw_deg = rad2deg(right - left);

  // Main lobe runs down to the first minimum on each side.
  Eigen::Index lo = i0, hi = i0;
  while (lo > 0 && v[lo - 1] <= v[lo]) --lo;
  while (hi + 1 < n && v[hi + 1] <= v[hi]) ++hi;

  for (Eigen::Index j = 0; j < n; ++j) {
    if (j >= lo && j <= hi) continue;
    const bool ge_left = j == 0 || v[j] >= v[j - 1];
    const bool ge_right = j + 1 == n || v[j] >= v[j + 1];
    const bool strict = (j > 0 && v[j] > v[j - 1]) || (j + 1 < n && v[j] > v[j + 1]);
    if (!(ge_left && ge_right && strict)) continue;
    const double rel = v[j] - peak;
    m.sidelobe_db = m.sidelobe_db ? std::max(*m.sidelobe_db, rel) : rel;
    // A rising edge at endfire is a lobe whose peak is still outside visible
    // space; only interior maxima count as grating lobes.
    if (rel >= -kGratingLobeThresholdDb && j > 0 && j + 1 < n) {
      m.grating_lobe = true;
      if (a[j] >= 0.0)
        m.grating_directions.emplace_back(a[j], wrap_2pi(cut_phi));
      else
        m.grating_directions.emplace_back(-a[j], wrap_2pi(cut_phi + kPi));
    }
  }
  if (m.sidelobe_db) m.sidelobe_db = std::min(*m.sidelobe_db, 0.0);
  return m;
}

double angular_separation(double theta1, double phi1, double theta2, double phi2) {
  const Eigen::Vector3d a(std::sin(theta1) * std::cos(phi1), std::sin(theta1) * std::sin(phi1), std::cos(theta1));
  const Eigen::Vector3d b(std::sin(theta2) * std::cos(phi2), std::sin(theta2) * std::sin(phi2), std::cos(theta2));
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

GratingLobeOnset grating_lobe_onset(double pitch, double frequency) {
  if (!(pitch > 0.0)) throw std::domain_error("grating_lobe_onset: pitch must be positive");
  const double ratio = wavelength(frequency) / pitch;
  if (ratio >= 2.0) return {GratingLobeOnset::Kind::unbounded, kPi / 2.0};
  if (ratio <= 1.0) return {GratingLobeOnset::Kind::at_broadside, 0.0};
  return {GratingLobeOnset::Kind::bounded, std::asin(ratio - 1.0)};
}

SweepRow scan_point(const ArrayLayout& layout, double frequency, double theta0, double phi0, const ElementModel& model,
                    const AngleGrid& grid) {
  model.validate();
  grid.validate();
  const Excitation ex = excitation_for(layout, SteeringCommand{theta0, phi0, frequency});
  const Eigen::Matrix2Xd pos = positions_m(layout);
  const double k = wavenumber(frequency);
  const Eigen::MatrixXd af2 = af_grid(pos, ex.weights(), k, grid).cwiseAbs2();

  FarFieldPattern p;
  p.grid = grid;
  p.frequency = frequency;
  p.kind = PatternKind::gain_estimate;
  p.gain = gain_scale(pos, ex.amplitude, k, model) *
           (af2.array().colwise() * element_power(model, grid.theta).array()).matrix();

  SweepRow row{};
  row.frequency = frequency;
  row.theta0 = theta0;
  row.phi0 = phi0;
  row.metrics = pattern_metrics(p, phi0);
  const auto [bi, bj] = argmax(af2);
  row.beam_theta = grid.theta[bi];
  row.beam_phi = grid.phi[bj];
  row.cut = extract_cut(p, phi0);
  row.cut.label = fmt::format("{:g} GHz, scan {:g} deg", frequency / 1e9, rad2deg(theta0));
  return row;
}

std::vector<SweepRow> scan_sweep(const ArrayLayout& layout, const std::vector<double>& frequencies,
                                 const std::vector<double>& scan_angles, double phi0, const ElementModel& model,
                                 const AngleGrid& grid) {
  if (frequencies.empty() || scan_angles.empty())
    throw std::invalid_argument("scan_sweep: frequency and scan lists must be non-empty");
  std::vector<SweepRow> rows;
  rows.reserve(frequencies.size() * scan_angles.size());
  for (const double f : frequencies)
    for (const double t : scan_angles) rows.push_back(scan_point(layout, f, t, phi0, model, grid));
  return rows;
}

Directivity directivity(const FarFieldPattern& pattern) {
  pattern.validate();
  const AngleGrid& g = pattern.grid;
  if (g.theta.size() < 10 || g.phi.size() < 10)
    throw AccuracyError("directivity: grid too coarse (need >= 10 samples per axis)");
  const Eigen::MatrixXd P = pattern.power();
  const double integral = power_integral(P, g);
  if (!(integral > 0.0)) throw DegeneratePatternError("directivity: pattern radiates no power");
  Directivity d{};
  d.linear = 4.0 * kPi * P.maxCoeff() / integral;
  d.dbi = 10.0 * std::log10(d.linear);
  d.hemisphere = g.theta[g.theta.size() - 1] <= kPi / 2.0 + 1e-9;
  return d;
}

std::string pattern_csv(const FarFieldPattern& pattern) {
  pattern.validate();
  const AngleGrid& g = pattern.grid;
  std::string out = pattern.is_complex() ? "theta_deg,phi_deg,re,im\n" : "theta_deg,phi_deg,gain_linear\n";
  for (Eigen::Index i = 0; i < g.theta.size(); ++i) {
    const std::string th = format_number(rad2deg(g.theta[i]));
    for (Eigen::Index j = 0; j < g.phi.size(); ++j) {
      out += th;
      out += ',';
      out += format_number(rad2deg(g.phi[j]));
      if (pattern.is_complex()) {
        out += ',' + format_number(pattern.field(i, j).real(), 17) + ',' + format_number(pattern.field(i, j).imag(), 17);
      } else {
        out += ',' + format_number(pattern.gain(i, j), 17);
      }
      out += '\n';
    }
  }
  return out;
}

void write_pattern_csv(const FarFieldPattern& pattern, const std::filesystem::path& path) {
  write_file_atomic(path, pattern_csv(pattern));
}

FarFieldPattern parse_pattern_csv(const std::string& text, double frequency) {
  std::istringstream in(text);
  std::string line;
  std::size_t row = 0;
  bool complex_kind = false;
  bool have_header = false;
  struct Sample {
    double theta, phi, a, b;
  };
  std::vector<Sample> samples;
  std::map<std::pair<double, double>, std::size_t> seen;

  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (!have_header) {
      if (line == "theta_deg,phi_deg,re,im") {
        complex_kind = true;
      } else if (line != "theta_deg,phi_deg,gain_linear") {
        throw FormatError("unrecognized pattern header '" + line + "'", row);
      }
      have_header = true;
      continue;
    }
    const std::size_t want = complex_kind ? 4 : 3;
    if (fields.size() != want)
      throw FormatError(fmt::format("expected {} fields, got {}", want, fields.size()), row);
    double v[4] = {0, 0, 0, 0};
    for (std::size_t k = 0; k < want; ++k) {
      try {
        v[k] = parse_double(fields[k]);
      } catch (const std::invalid_argument&) {
        throw FormatError("unparseable number '" + fields[k] + "'", row);
      }
      if (!std::isfinite(v[k])) throw FormatError("non-finite value", row);
    }
    if (!complex_kind && v[2] < 0.0) throw FormatError("negative gain", row);
    const auto key = std::make_pair(v[0], v[1]);
    if (const auto it = seen.find(key); it != seen.end())
      throw FormatError(fmt::format("duplicate grid point theta={} phi={} (first at row {})", fields[0], fields[1],
                                    it->second),
                        row);
    seen.emplace(key, row);
    samples.push_back({v[0], v[1], v[2], v[3]});
  }
  if (!have_header) throw FormatError("empty pattern file", 0);

  std::vector<double> thetas, phis;
  for (const auto& s : samples) {
    thetas.push_back(s.theta);
    phis.push_back(s.phi);
  }
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
  std::sort(phis.begin(), phis.end());
  phis.erase(std::unique(phis.begin(), phis.end()), phis.end());
  if (thetas.size() < 2 || phis.size() < 2) throw FormatError("pattern grid needs >= 2 samples per axis", 0);

  if (samples.size() != thetas.size() * phis.size()) {
    for (std::size_t i = 0; i < thetas.size(); ++i)
      for (std::size_t j = 0; j < phis.size(); ++j)
        if (!seen.contains({thetas[i], phis[j]}))
          throw FormatError(fmt::format("ragged grid: missing point theta={} deg, phi={} deg",
                                        format_number(thetas[i]), format_number(phis[j])),
                            0);
  }

  FarFieldPattern p;
  p.frequency = frequency;
  p.kind = PatternKind::imported_embedded;
  p.grid.theta.resize(static_cast<Eigen::Index>(thetas.size()));
  p.grid.phi.resize(static_cast<Eigen::Index>(phis.size()));
  for (std::size_t i = 0; i < thetas.size(); ++i) p.grid.theta[static_cast<Eigen::Index>(i)] = deg2rad(thetas[i]);
  for (std::size_t j = 0; j < phis.size(); ++j) p.grid.phi[static_cast<Eigen::Index>(j)] = deg2rad(phis[j]);
  const auto nt = p.grid.theta.size(), np = p.grid.phi.size();
  if (complex_kind)
    p.field.resize(nt, np);
  else
    p.gain.resize(nt, np);
  for (const auto& s : samples) {
    const auto i = static_cast<Eigen::Index>(std::lower_bound(thetas.begin(), thetas.end(), s.theta) - thetas.begin());
    const auto j = static_cast<Eigen::Index>(std::lower_bound(phis.begin(), phis.end(), s.phi) - phis.begin());
    if (complex_kind)
      p.field(i, j) = {s.a, s.b};
    else
      p.gain(i, j) = s.a;
  }
  try {
    p.validate();
  } catch (const std::exception& e) {
    throw FormatError(e.what(), 0);
  }
  return p;
}

FarFieldPattern import_embedded_pattern(const std::filesystem::path& path, double frequency) {
  try {
    return parse_pattern_csv(read_text_file(path), frequency);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what(), e.row(), false);
  }
}

}  // namespace camv
