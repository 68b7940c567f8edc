#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "camv/farfield.hpp"
#include "camv/geometry.hpp"

namespace camv {

struct ScanDirection {
  double theta_deg;
  double phi_deg;
};

struct RfTask {
  std::filesystem::path return_loss_csv;
  std::optional<double> threshold_rl_db;  ///< default 10 dB when neither limit is given
  std::optional<double> vswr_max;
};

/// A batch run. Angles are in degrees, frequencies in Hz, lengths in mm.
struct Scenario {
  std::string preset;  ///< empty when the element is given field by field
  ElementParams element;
  ArrayLayout layout;
  std::vector<double> frequencies;
  std::vector<ScanDirection> scans;
  ElementModel element_model;
  bool corrugated = true;
  double theta_step_deg = 0.25;
  double phi_step_deg = 1.0;
  std::filesystem::path output_dir = "camv_out";
  std::optional<std::filesystem::path> element_pattern_csv;
  std::optional<RfTask> rf;
};

/// Named element presets. `CAMV_PRESET_DIR`, when set, is searched first
/// for `<name>.json`; the built-in `camv-table1` is always available.
ElementParams load_preset(const std::string& name);

/// Parses scenario JSON. Relative file references resolve against `base_dir`.
/// Throws ConfigError carrying the JSON pointer of the offending field.
Scenario parse_scenario(const std::string& json_text, const std::filesystem::path& base_dir = {});
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace camv
