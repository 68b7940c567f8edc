#include "camv/config.hpp"

#include <cmath>
#include <cstdlib>
#include <set>

#include <json.hpp>

#include "camv/errors.hpp"
#include "camv/textio.hpp"

namespace camv {
namespace {

using nlohmann::json;

struct ScalarField {
  const char* key;
  double ElementParams::*member;
};

constexpr ScalarField kScalarFields[] = {
    {"aperture_width_mm", &ElementParams::aperture_width},
    {"taper_mouth_mm", &ElementParams::taper_mouth},
    {"taper_throat_mm", &ElementParams::taper_throat},
    {"taper_length_mm", &ElementParams::taper_length},
    {"height_mm", &ElementParams::height},
    {"pitch_mm", &ElementParams::pitch},
    {"thickness_mm", &ElementParams::thickness},
    {"base_height_mm", &ElementParams::base_height},
    {"slot_width_mm", &ElementParams::slot_width},
    {"design_frequency_hz", &ElementParams::design_frequency},
};

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError(child(path, key), "unknown field '" + key + "'");
  }
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
  return v;
}

double positive(const json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v > 0.0)) throw ConfigError(path, "must be > 0");
  return v;
}

int positive_int(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1'000'000)
    throw ConfigError(path, "expected a positive integer");
  return j.get<int>();
}

std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

template <std::size_t N>
void fixed_array(const json& j, const std::string& path, std::array<double, N>& out) {
  if (!j.is_array() || j.size() != N) throw ConfigError(path, "expected an array of " + std::to_string(N) + " numbers");
  for (std::size_t i = 0; i < N; ++i) out[i] = positive(j[i], child(path, i));
}

std::set<std::string> element_keys() {
  std::set<std::string> keys{"narrow_slots_mm", "corrugation_depths_mm"};
  for (const auto& f : kScalarFields) keys.insert(f.key);
  return keys;
}

/// Applies the fields present in `j` onto `p`. With `complete`, every field must be present.
void apply_element_fields(const json& j, const std::string& path, ElementParams& p, bool complete) {
  for (const auto& f : kScalarFields) {
    if (j.contains(f.key)) {
      p.*f.member = positive(j[f.key], child(path, f.key));
    } else if (complete) {
      throw ConfigError(child(path, f.key), std::string("missing field '") + f.key + "'");
    }
  }
  if (j.contains("narrow_slots_mm")) {
    fixed_array(j["narrow_slots_mm"], child(path, "narrow_slots_mm"), p.narrow_slots);
  } else if (complete) {
    throw ConfigError(child(path, "narrow_slots_mm"), "missing field 'narrow_slots_mm'");
  }
  if (j.contains("corrugation_depths_mm")) {
    fixed_array(j["corrugation_depths_mm"], child(path, "corrugation_depths_mm"), p.corrugation_depths);
  } else if (complete) {
    throw ConfigError(child(path, "corrugation_depths_mm"), "missing field 'corrugation_depths_mm'");
  }
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", what + " is not valid JSON: " + e.what());
  }
}

std::optional<ElementParams> preset_from_dir(const std::string& name) {
  const char* dir = std::getenv("CAMV_PRESET_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  const std::filesystem::path file = std::filesystem::path(dir) / (name + ".json");
  if (!std::filesystem::exists(file)) return std::nullopt;
  const json j = parse_json(read_text_file(file), file.string());
  const std::string where = file.string() + "#";
  require_object(j, where);
  reject_unknown(j, where, element_keys());
  ElementParams p{};
  apply_element_fields(j, where, p, true);
  return p;
}

ElementParams preset_or_throw(const std::string& name, const std::string& path) {
  try {
    return load_preset(name);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

ElementParams parse_element(const json& j, const std::string& path, std::string& preset) {
  if (j.is_string()) {
    preset = j.get<std::string>();
    return preset_or_throw(preset, path);
  }
  require_object(j, path);
  auto keys = element_keys();
  keys.insert("preset");
  reject_unknown(j, path, keys);
  ElementParams p{};
  const bool from_preset = j.contains("preset");
  if (from_preset) {
    preset = string(j["preset"], child(path, "preset"));
    p = preset_or_throw(preset, child(path, "preset"));
  }
  apply_element_fields(j, path, p, !from_preset);
  return p;
}

}  // namespace

ElementParams load_preset(const std::string& name) {
  if (auto p = preset_from_dir(name)) return *p;
  if (name == "camv-table1") return camv_table1();
  throw std::invalid_argument("unknown preset '" + name + "'");
}

Scenario parse_scenario(const std::string& json_text, const std::filesystem::path& base_dir) {
  const json j = parse_json(json_text, "scenario");
  require_object(j, "");
  reject_unknown(j, "", {"element", "array", "frequencies_hz", "scans", "element_model", "corrugated", "grid",
                         "output_dir", "element_pattern_csv", "rf"});

  auto resolve = [&](const std::string& f) {
    const std::filesystem::path p(f);
    return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
  };

  Scenario s;
  if (!j.contains("element")) throw ConfigError("/element", "missing field 'element'");
  s.element = parse_element(j["element"], "/element", s.preset);

  s.layout.pitch_x = s.layout.pitch_y = s.element.pitch;
  if (j.contains("array")) {
    const json& a = j["array"];
    require_object(a, "/array");
    reject_unknown(a, "/array", {"rows", "cols", "pitch_x_mm", "pitch_y_mm"});
    if (a.contains("rows")) s.layout.rows = positive_int(a["rows"], "/array/rows");
    if (a.contains("cols")) s.layout.cols = positive_int(a["cols"], "/array/cols");
    if (a.contains("pitch_x_mm")) s.layout.pitch_x = positive(a["pitch_x_mm"], "/array/pitch_x_mm");
    if (a.contains("pitch_y_mm")) s.layout.pitch_y = positive(a["pitch_y_mm"], "/array/pitch_y_mm");
  }

  if (j.contains("frequencies_hz")) {
    const json& f = j["frequencies_hz"];
    if (!f.is_array() || f.empty()) throw ConfigError("/frequencies_hz", "expected a non-empty array");
    for (std::size_t i = 0; i < f.size(); ++i) s.frequencies.push_back(positive(f[i], child("/frequencies_hz", i)));
  } else {
    s.frequencies.push_back(s.element.design_frequency);
  }

  if (j.contains("scans")) {
    const json& sc = j["scans"];
    if (!sc.is_array() || sc.empty()) throw ConfigError("/scans", "expected a non-empty array");
    for (std::size_t i = 0; i < sc.size(); ++i) {
      const std::string path = child("/scans", i);
      require_object(sc[i], path);
      reject_unknown(sc[i], path, {"theta_deg", "phi_deg"});
      if (!sc[i].contains("theta_deg")) throw ConfigError(child(path, "theta_deg"), "missing field 'theta_deg'");
      ScanDirection d{number(sc[i]["theta_deg"], child(path, "theta_deg")), 0.0};
      if (sc[i].contains("phi_deg")) d.phi_deg = number(sc[i]["phi_deg"], child(path, "phi_deg"));
      if (d.theta_deg < 0.0 || d.theta_deg >= 90.0) throw ConfigError(child(path, "theta_deg"), "must be in [0, 90)");
      s.scans.push_back(d);
    }
  } else {
    s.scans.push_back({0.0, 0.0});
  }

  if (j.contains("element_model")) {
    const json& m = j["element_model"];
    require_object(m, "/element_model");
    reject_unknown(m, "/element_model", {"kind", "q"});
    const std::string kind = m.contains("kind") ? string(m["kind"], "/element_model/kind") : "cosine_q";
    if (kind == "isotropic") {
      s.element_model = ElementModel::isotropic();
    } else if (kind == "cosine_q") {
      const double q = m.contains("q") ? number(m["q"], "/element_model/q") : 1.0;
      if (q < 0.0) throw ConfigError("/element_model/q", "must be >= 0");
      s.element_model = ElementModel::cosine(q);
    } else {
      throw ConfigError("/element_model/kind", "expected 'isotropic' or 'cosine_q'");
    }
  }

  if (j.contains("corrugated")) {
    if (!j["corrugated"].is_boolean()) throw ConfigError("/corrugated", "expected a boolean");
    s.corrugated = j["corrugated"].get<bool>();
  }

  if (j.contains("grid")) {
    const json& g = j["grid"];
    require_object(g, "/grid");
    reject_unknown(g, "/grid", {"theta_step_deg", "phi_step_deg"});
    if (g.contains("theta_step_deg")) s.theta_step_deg = positive(g["theta_step_deg"], "/grid/theta_step_deg");
    if (g.contains("phi_step_deg")) s.phi_step_deg = positive(g["phi_step_deg"], "/grid/phi_step_deg");
  }

  if (j.contains("output_dir")) s.output_dir = string(j["output_dir"], "/output_dir");
  if (j.contains("element_pattern_csv"))
    s.element_pattern_csv = resolve(string(j["element_pattern_csv"], "/element_pattern_csv"));

  if (j.contains("rf")) {
    const json& r = j["rf"];
    require_object(r, "/rf");
    reject_unknown(r, "/rf", {"return_loss_csv", "threshold_rl_db", "vswr_max"});
    if (!r.contains("return_loss_csv")) throw ConfigError("/rf/return_loss_csv", "missing field 'return_loss_csv'");
    RfTask t;
    t.return_loss_csv = resolve(string(r["return_loss_csv"], "/rf/return_loss_csv"));
    if (r.contains("threshold_rl_db")) t.threshold_rl_db = positive(r["threshold_rl_db"], "/rf/threshold_rl_db");
    if (r.contains("vswr_max")) {
      t.vswr_max = number(r["vswr_max"], "/rf/vswr_max");
      if (!(*t.vswr_max > 1.0)) throw ConfigError("/rf/vswr_max", "must be > 1");
    }
    if (t.threshold_rl_db && t.vswr_max) throw ConfigError("/rf", "give either threshold_rl_db or vswr_max, not both");
    s.rf = t;
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const IoError& e) {
    throw ConfigError("", std::string("cannot read scenario: ") + e.what());
  }
  return parse_scenario(text, path.parent_path());
}

}  // namespace camv
