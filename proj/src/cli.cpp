#include "camv/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "camv/beamsteer.hpp"
#include "camv/config.hpp"
#include "camv/errors.hpp"
#include "camv/farfield.hpp"
#include "camv/geometry.hpp"
#include "camv/io_export.hpp"
#include "camv/rfmath.hpp"
#include "camv/textio.hpp"

namespace camv::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Context {
  Scenario scenario;
  fs::path out_dir;
  std::vector<std::string> files;

  void write(const std::string& name, const std::string& bytes) {
    write_file_atomic(out_dir / name, bytes);
    files.push_back(name);
  }
  AngleGrid grid() const { return AngleGrid::uniform(scenario.theta_step_deg, scenario.phi_step_deg); }
};

std::string fmt9(double v) { return format_number(v); }

std::string scan_tag(double freq, const ScanDirection& s) {
  return fmt::format("{}GHz_theta{}_phi{}", fmt9(freq / 1e9), fmt9(s.theta_deg), fmt9(s.phi_deg));
}

SteeringCommand command_for(double freq, const ScanDirection& s) {
  return SteeringCommand{deg2rad(s.theta_deg), deg2rad(s.phi_deg), freq};
}

std::string profile_csv(const Polyline2d& profile) {
  std::string out = "u_mm,v_mm\n";
  for (Eigen::Index i = 0; i < profile.size(); ++i)
    out += fmt9(profile.points(0, i)) + ',' + fmt9(profile.points(1, i)) + '\n';
  return out;
}

void cmd_geom(Context& ctx) {
  const ElementParams& p = ctx.scenario.element;
  require_valid(p);
  ctx.scenario.layout.validate();

  const Polyline2d plain = element_profile(p, false);
  ctx.write("profile_plain.csv", profile_csv(plain));
  std::vector<CorrugationSlot> slots;
  Polyline2d shape = plain;
  if (ctx.scenario.corrugated) {
    shape = element_profile(p, true);
    slots = corrugation_slots(p);
    ctx.write("profile_corrugated.csv", profile_csv(shape));
  }
  ctx.write("element_profile.svg", profile_svg(shape, slots));
  ctx.write("element.stl", stl_bytes(extrude_profile(shape, p.thickness), StlMode::binary));

  const ArrayLayout& layout = ctx.scenario.layout;
  const Eigen::Matrix2Xd centers = array_lattice(layout);
  std::string lattice = "element_index,row,col,x_mm,y_mm\n";
  for (int k = 1; k <= layout.size(); ++k) {
    const auto [row, col] = layout.row_col(k);
    lattice += fmt::format("{},{},{},{},{}\n", k, row, col, fmt9(centers(0, k - 1)), fmt9(centers(1, k - 1)));
  }
  ctx.write("lattice.csv", lattice);
}

void cmd_steer(Context& ctx) {
  const ArrayLayout& layout = ctx.scenario.layout;
  layout.validate();
  for (const double f : ctx.scenario.frequencies) {
    for (const auto& s : ctx.scenario.scans) {
      const std::string name = "excitation_" + scan_tag(f, s) + ".csv";
      write_excitation_csv(layout, excitation_for(layout, command_for(f, s)), ctx.out_dir / name);
      ctx.files.push_back(name);
    }
  }
}

void cmd_pattern(Context& ctx) {
  const ArrayLayout& layout = ctx.scenario.layout;
  std::optional<FarFieldPattern> embedded;
  if (ctx.scenario.element_pattern_csv) embedded = import_embedded_pattern(*ctx.scenario.element_pattern_csv);
  const AngleGrid grid = ctx.grid();
  for (const double f : ctx.scenario.frequencies) {
    for (const auto& s : ctx.scenario.scans) {
      const Excitation ex = excitation_for(layout, command_for(f, s));
      const FarFieldPattern pat = embedded ? compute_pattern_embedded(layout, ex, f, *embedded)
                                           : compute_pattern(layout, ex, f, grid, ctx.scenario.element_model);
      const std::string tag = scan_tag(f, s);
      ctx.write("pattern_" + tag + ".csv", pattern_csv(pat));
      PatternCut cut = extract_cut(pat, deg2rad(s.phi_deg));
      cut.label = fmt::format("{} GHz, scan {} deg, phi {} deg", fmt9(f / 1e9), fmt9(s.theta_deg), fmt9(s.phi_deg));
      ctx.write("pattern_" + tag + ".svg", pattern_plot_svg(std::span<const PatternCut>(&cut, 1)));
    }
  }
}

void cmd_sweep(Context& ctx) {
  const ArrayLayout& layout = ctx.scenario.layout;
  const AngleGrid grid = ctx.grid();
  std::vector<SweepRow> rows;
  for (const double f : ctx.scenario.frequencies)
    for (const auto& s : ctx.scenario.scans)
      rows.push_back(
          scan_point(layout, f, deg2rad(s.theta_deg), deg2rad(s.phi_deg), ctx.scenario.element_model, grid));

  std::string csv =
      "frequency_hz,theta0_deg,phi0_deg,beam_theta_deg,beam_phi_deg,peak_theta_deg,peak_phi_deg,peak_db,"
      "hpbw_deg,sidelobe_db,grating_lobe,grating_free_scan_deg\n";
  for (const auto& r : rows) {
    const auto onset = grating_lobe_onset(std::max(layout.pitch_x, layout.pitch_y) * 1e-3, r.frequency);
    const auto& m = r.metrics;
    csv += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", fmt9(r.frequency), fmt9(rad2deg(r.theta0)),
                       fmt9(rad2deg(r.phi0)), fmt9(rad2deg(r.beam_theta)), fmt9(rad2deg(r.beam_phi)),
                       fmt9(rad2deg(m.peak_theta)), fmt9(rad2deg(m.peak_phi)), fmt9(m.peak_db), fmt9(m.hpbw_deg),
                       m.sidelobe_db ? fmt9(*m.sidelobe_db) : std::string(), m.grating_lobe ? 1 : 0,
                       fmt9(rad2deg(onset.max_scan)));
  }
  ctx.write("sweep_metrics.csv", csv);

  std::vector<PatternCut> cuts;
  for (const auto& r : rows) cuts.push_back(r.cut);
  ctx.write("sweep_cuts.svg", pattern_plot_svg(cuts));
}

void cmd_rf(Context& ctx) {
  if (!ctx.scenario.rf) throw ConfigError("/rf", "the rf command needs an 'rf' section");
  const RfTask& t = *ctx.scenario.rf;
  const auto points = read_return_loss_csv(t.return_loss_csv);
  const double threshold =
      t.vswr_max ? rl_db_from_gamma(gamma_from_vswr(*t.vswr_max)) : t.threshold_rl_db.value_or(10.0);
  const auto bands = t.vswr_max ? band_below_vswr(points, *t.vswr_max) : band_below_threshold(points, threshold);
  std::string csv = "start_hz,stop_hz,bandwidth_hz,threshold_rl_db\n";
  for (const auto& b : bands)
    csv += fmt::format("{},{},{},{}\n", fmt9(b.start), fmt9(b.stop), fmt9(b.stop - b.start), fmt9(threshold));
  ctx.write("rf_bands.csv", csv);
}

ordered_json issues_json(const std::vector<ValidationIssue>& issues) {
  ordered_json a = ordered_json::array();
  for (const auto& i : issues) a.push_back({{"code", i.code}, {"message", i.message}});
  return a;
}

/// Returns false when the report holds errors.
bool cmd_validate(Context& ctx, ordered_json& status) {
  const ValidationReport r = validate_params(ctx.scenario.element);
  ordered_json report;
  report["preset"] = ctx.scenario.preset;
  report["design_frequency_hz"] = ctx.scenario.element.design_frequency;
  report["ok"] = r.ok();
  report["errors"] = issues_json(r.errors);
  report["warnings"] = issues_json(r.warnings);
  report["notes"] = issues_json(r.notes);
  ctx.write("validation_report.json", report.dump(2) + "\n");
  status["errors"] = r.errors.size();
  status["warnings"] = report["warnings"];
  return r.ok();
}

void error_line(std::ostream& err, const std::string& kind, const std::string& path, const std::string& message) {
  ordered_json e;
  e["status"] = "error";
  e["kind"] = kind;
  e["path"] = path;
  e["message"] = message;
  err << e.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corrugated Vivaldi phased-array batch tool", "camv"};
  std::string command;
  std::string scenario_path;
  std::string out_dir;
  double grid_step = 0.0;
  app.add_option("command", command, "geom | steer | pattern | sweep | rf | validate")
      ->required()
      ->check(CLI::IsMember({"geom", "steer", "pattern", "sweep", "rf", "validate"}));
  app.add_option("--scenario", scenario_path, "scenario JSON file")->required();
  app.add_option("--out", out_dir, "output directory (overrides output_dir)");
  app.add_option("--grid-step", grid_step, "theta grid step in degrees")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", "", e.what());
    return 2;
  }

  try {
    Context ctx{load_scenario(scenario_path), {}, {}};
    if (grid_step > 0.0) ctx.scenario.theta_step_deg = grid_step;
    ctx.out_dir = out_dir.empty() ? ctx.scenario.output_dir : fs::path(out_dir);
    std::error_code ec;
    fs::create_directories(ctx.out_dir, ec);
    if (ec || !fs::is_directory(ctx.out_dir))
      throw IoError("cannot create output directory " + ctx.out_dir.string());

    ordered_json status;
    status["status"] = "ok";
    status["command"] = command;
    int code = 0;
    if (command == "geom") {
      cmd_geom(ctx);
    } else if (command == "steer") {
      cmd_steer(ctx);
    } else if (command == "pattern") {
      cmd_pattern(ctx);
    } else if (command == "sweep") {
      cmd_sweep(ctx);
    } else if (command == "rf") {
      cmd_rf(ctx);
    } else if (!cmd_validate(ctx, status)) {
      const ValidationReport r = validate_params(ctx.scenario.element);
      error_line(err, "geometry", "/element", r.errors.front().message);
      code = 1;
    }
    status["files"] = ctx.files;
    if (code == 0) out << status.dump() << '\n';
    return code;
  } catch (const ConfigError& e) {
    error_line(err, "config", e.path(), e.what());
    return 3;
  } catch (const GeometryError& e) {
    error_line(err, "geometry", "", e.what());
  } catch (const FormatError& e) {
    error_line(err, "format", "", e.what());
  } catch (const IoError& e) {
    error_line(err, "io", "", e.what());
  } catch (const DegeneratePatternError& e) {
    error_line(err, "degenerate_pattern", "", e.what());
  } catch (const AccuracyError& e) {
    error_line(err, "accuracy", "", e.what());
  } catch (const std::logic_error& e) {
    error_line(err, "domain", "", e.what());
  } catch (const std::exception& e) {
    error_line(err, "internal", "", e.what());
  }
  return 1;
}

}  // namespace camv::cli
