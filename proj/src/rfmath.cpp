#include "camv/rfmath.hpp"

#include <limits>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "camv/errors.hpp"
#include "camv/textio.hpp"

namespace camv {

double vswr_from_rl_db(double rl_db) { return vswr_from_gamma(gamma_from_rl_db(rl_db).value); }

ReflectionPoint ReflectionPoint::from_rl_db(double frequency, double rl_db) {
  ReflectionPoint p{frequency, gamma_from_rl_db(rl_db).value};
  p.validate();
  return p;
}

void ReflectionPoint::validate() const {
  if (!(frequency > 0.0) || !std::isfinite(frequency)) throw std::domain_error("ReflectionPoint: frequency must be positive");
  if (!(gamma_mag >= 0.0 && gamma_mag < 1.0)) throw std::domain_error("ReflectionPoint: |gamma| must lie in [0, 1)");
}

std::vector<FrequencyInterval> band_below_threshold(const std::vector<ReflectionPoint>& points, double threshold_rl_db) {
  if (points.size() < 2) throw std::invalid_argument("band_below_threshold: need at least 2 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].validate();
    if (i > 0 && !(points[i].frequency > points[i - 1].frequency))
      throw std::invalid_argument(fmt::format("band_below_threshold: points not sorted by frequency at index {}", i));
  }

  // A perfect match has infinite return loss; cap it so interpolation stays finite.
  auto rl = [&](std::size_t i) { return std::min(rl_db_from_gamma(points[i].gamma_mag), kReturnLossClampDb); };
  auto crossing = [&](std::size_t i) {
    const double a = rl(i), b = rl(i + 1);
    const double f0 = points[i].frequency, f1 = points[i + 1].frequency;
    return f0 + (threshold_rl_db - a) / (b - a) * (f1 - f0);
  };

  std::vector<FrequencyInterval> out;
  bool inside = rl(0) >= threshold_rl_db;
  double start = points[0].frequency;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const bool next = rl(i + 1) >= threshold_rl_db;
    if (inside && !next) {
      out.push_back({start, crossing(i)});
    } else if (!inside && next) {
      start = crossing(i);
    }
    inside = next;
  }
  if (inside) out.push_back({start, points.back().frequency});
  return out;
}

std::vector<FrequencyInterval> band_below_vswr(const std::vector<ReflectionPoint>& points, double vswr_max) {
  return band_below_threshold(points, rl_db_from_gamma(gamma_from_vswr(vswr_max)));
}

std::vector<ReflectionPoint> parse_return_loss_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t row = 0;
  bool have_header = false;
  std::vector<ReflectionPoint> pts;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      if (line != "freq_hz,rl_db") throw FormatError("expected header 'freq_hz,rl_db'", row);
      have_header = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 2) throw FormatError(fmt::format("expected 2 fields, got {}", f.size()), row);
    try {
      pts.push_back(ReflectionPoint::from_rl_db(parse_double(f[0]), parse_double(f[1])));
    } catch (const std::exception& e) {
      throw FormatError(e.what(), row);
    }
  }
  if (!have_header) throw FormatError("empty return-loss file");
  return pts;
}

std::vector<ReflectionPoint> read_return_loss_csv(const std::filesystem::path& path) {
  try {
    return parse_return_loss_csv(read_text_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what(), e.row(), false);
  }
}

}  // namespace camv
