#include "camv/io_export.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include <fmt/format.h>

#include "camv/errors.hpp"
#include "camv/textio.hpp"

namespace camv {
namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
}

void put_f32(std::string& out, double v) {
  const auto f = static_cast<float>(v);
  std::uint32_t bits;
  std::memcpy(&bits, &f, sizeof bits);
  put_u32(out, bits);
}

std::string xml_escape(const std::string& s) {
  std::string o;
  for (const char c : s) {
    switch (c) {
      case '&': o += "&amp;"; break;
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

std::string num(double v) { return format_number(v, 6); }

}  // namespace

double TriangleMesh::signed_volume() const {
  double vol = 0.0;
  for (Eigen::Index t = 0; t < triangles.cols(); ++t) {
    const Eigen::Vector3d a = vertices.col(triangles(0, t));
    const Eigen::Vector3d b = vertices.col(triangles(1, t));
    const Eigen::Vector3d c = vertices.col(triangles(2, t));
    vol += a.dot(b.cross(c));
  }
  return vol / 6.0;
}

void TriangleMesh::validate() const {
  if (normals.cols() != triangles.cols()) throw GeometryError("TriangleMesh: one normal per facet required");
  for (Eigen::Index t = 0; t < triangles.cols(); ++t) {
    for (int k = 0; k < 3; ++k)
      if (triangles(k, t) < 0 || triangles(k, t) >= vertices.cols())
        throw GeometryError(fmt::format("TriangleMesh: facet {} index out of range", t));
    const Eigen::Vector3d a = vertices.col(triangles(0, t));
    const Eigen::Vector3d e1 = vertices.col(triangles(1, t)) - a;
    const Eigen::Vector3d e2 = vertices.col(triangles(2, t)) - a;
    if (!(e1.cross(e2).norm() > 1e-14 * e1.norm() * e2.norm()))
      throw GeometryError(fmt::format("TriangleMesh: facet {} is degenerate", t));
  }
}

TriangleMesh extrude_profile(const Polyline2d& profile, double thickness) {
  if (!profile.closed) throw GeometryError("extrude_profile: profile must be closed");
  if (!(thickness > 0.0)) throw std::domain_error("extrude_profile: thickness must be positive");
  Eigen::Matrix2Xd ring = remove_collinear(profile.points);
  if (!is_simple_polygon(ring)) throw GeometryError("extrude_profile: profile self-intersects");
  if (signed_area(ring) < 0.0) ring = ring.rowwise().reverse().eval();

  const auto n = static_cast<int>(ring.cols());
  const auto caps = ear_clip(ring);

  TriangleMesh mesh;
  mesh.vertices.resize(3, 2 * n);
  for (int i = 0; i < n; ++i) {
    mesh.vertices.col(i) << ring(0, i), ring(1, i), 0.0;
    mesh.vertices.col(i + n) << ring(0, i), ring(1, i), thickness;
  }

  const auto nt = static_cast<Eigen::Index>(2 * caps.size() + 2 * static_cast<std::size_t>(n));
  mesh.triangles.resize(3, nt);
  Eigen::Index t = 0;
  for (const auto& c : caps) mesh.triangles.col(t++) << c[0], c[2], c[1];           // bottom, facing -z
  for (const auto& c : caps) mesh.triangles.col(t++) << c[0] + n, c[1] + n, c[2] + n;  // top, facing +z
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    mesh.triangles.col(t++) << i, j, j + n;
    mesh.triangles.col(t++) << i, j + n, i + n;
  }

  mesh.normals.resize(3, nt);
  for (Eigen::Index k = 0; k < nt; ++k) {
    const Eigen::Vector3d a = mesh.vertices.col(mesh.triangles(0, k));
    const Eigen::Vector3d b = mesh.vertices.col(mesh.triangles(1, k));
    const Eigen::Vector3d c = mesh.vertices.col(mesh.triangles(2, k));
    mesh.normals.col(k) = (b - a).cross(c - a).normalized();
  }
  mesh.validate();
  return mesh;
}

std::string stl_bytes(const TriangleMesh& mesh, StlMode mode) {
  if (mesh.facet_count() == 0) throw GeometryError("write_stl: refusing to write a mesh with no facets");
  mesh.validate();
  std::string out;
  if (mode == StlMode::binary) {
    std::string header = "camv binary STL units=mm";
    header.resize(80, ' ');
    out.reserve(84 + 50 * static_cast<std::size_t>(mesh.facet_count()));
    out += header;
    put_u32(out, static_cast<std::uint32_t>(mesh.facet_count()));
    for (Eigen::Index t = 0; t < mesh.facet_count(); ++t) {
      for (int k = 0; k < 3; ++k) put_f32(out, mesh.normals(k, t));
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < 3; ++k) put_f32(out, mesh.vertices(k, mesh.triangles(v, t)));
      out.push_back('\0');
      out.push_back('\0');
    }
    return out;
  }

  out = "solid camv units=mm\n";
  for (Eigen::Index t = 0; t < mesh.facet_count(); ++t) {
    out += fmt::format("  facet normal {} {} {}\n    outer loop\n", format_number(mesh.normals(0, t)),
                       format_number(mesh.normals(1, t)), format_number(mesh.normals(2, t)));
    for (int v = 0; v < 3; ++v) {
      const Eigen::Vector3d p = mesh.vertices.col(mesh.triangles(v, t));
      out += fmt::format("      vertex {} {} {}\n", format_number(p.x()), format_number(p.y()), format_number(p.z()));
    }
    out += "    endloop\n  endfacet\n";
  }
  out += "endsolid camv\n";
  return out;
}

void write_stl(const TriangleMesh& mesh, const std::filesystem::path& path, StlMode mode) {
  write_file_atomic(path, stl_bytes(mesh, mode));
}

std::string profile_svg(const Polyline2d& profile, std::span<const CorrugationSlot> slots) {
  if (profile.size() < 2) throw GeometryError("write_profile_svg: profile has fewer than 2 points");
  const Eigen::Matrix2d box = bounding_box(profile.points);
  const double margin = 2.0;
  const double x0 = std::floor(box(0, 0)), x1 = std::ceil(box(0, 1));
  const double y0 = std::floor(box(1, 0)), y1 = std::ceil(box(1, 1));
  const double width = x1 - x0 + 2 * margin, height = y1 - y0 + 2 * margin;
  // SVG y grows downward; flip so the aperture is at the top.
  auto sx = [&](double u) { return u - x0 + margin; };
  auto sy = [&](double v) { return y1 - v + margin; };

  std::string s = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}mm\" height=\"{}mm\" viewBox=\"0 0 {} {}\">\n",
      num(width * 10), num(height * 10), num(width), num(height));
  s += "<g class=\"axes\" stroke=\"#888\" stroke-width=\"0.03\" font-size=\"0.5\" fill=\"#444\">\n";
  s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", num(sx(x0)), num(sy(y0)), num(sx(x1)), num(sy(y0)));
  s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", num(sx(x0)), num(sy(y0)), num(sx(x0)), num(sy(y1)));
  for (double u = x0; u <= x1 + 1e-9; u += 1.0) {
    s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", num(sx(u)), num(sy(y0)), num(sx(u)), num(sy(y0) + 0.2));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\">{}</text>\n", num(sx(u)),
                     num(sy(y0) + 0.8), num(u));
  }
  for (double v = y0; v <= y1 + 1e-9; v += 1.0) {
    s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", num(sx(x0) - 0.2), num(sy(v)), num(sx(x0)), num(sy(v)));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\" stroke=\"none\">{}</text>\n", num(sx(x0) - 0.3),
                     num(sy(v) + 0.15), num(v));
  }
  s += fmt::format("<text x=\"{}\" y=\"{}\" stroke=\"none\">mm</text>\n", num(sx(x1) + 0.3), num(sy(y0) + 0.8));
  s += "</g>\n";

  s += "<path class=\"profile\" fill=\"#c8ccd4\" stroke=\"#222\" stroke-width=\"0.02\" d=\"";
  for (Eigen::Index i = 0; i < profile.size(); ++i) {
    s += fmt::format("{}{} {} ", i == 0 ? "M" : "L", num(sx(profile.points(0, i))), num(sy(profile.points(1, i))));
  }
  if (profile.closed) s += "Z";
  s += "\"/>\n";

  for (const auto& slot : slots) {
    const Eigen::Vector2d tangent(-slot.direction.y(), slot.direction.x());
    const Eigen::Vector2d a = slot.center - tangent * slot.width / 2.0;
    const Eigen::Vector2d b = slot.center + tangent * slot.width / 2.0;
    const Eigen::Vector2d cut = slot.direction * slot.effective_depth;
    const Eigen::Vector2d corners[4] = {a, b, b + cut, a + cut};
    s += fmt::format("<polygon class=\"corrugation-slot\" data-index=\"{}\" fill=\"none\" stroke=\"#d22\" "
                     "stroke-width=\"0.02\" points=\"",
                     slot.index);
    for (const auto& c : corners) s += fmt::format("{},{} ", num(sx(c.x())), num(sy(c.y())));
    s += "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

void write_profile_svg(const Polyline2d& profile, const std::filesystem::path& path,
                       std::span<const CorrugationSlot> slots) {
  write_file_atomic(path, profile_svg(profile, slots));
}

std::string pattern_plot_svg(std::span<const PatternCut> cuts) {
  if (cuts.empty()) throw std::invalid_argument("write_pattern_plot: no pattern cuts to plot");
  double top = -std::numeric_limits<double>::infinity();
  double amin = std::numeric_limits<double>::infinity(), amax = -amin;
  for (const auto& c : cuts) {
    if (c.angle.size() < 2 || c.angle.size() != c.value_db.size())
      throw std::invalid_argument("write_pattern_plot: empty or malformed cut '" + c.label + "'");
    top = std::max(top, c.value_db.maxCoeff());
    amin = std::min(amin, rad2deg(c.angle.minCoeff()));
    amax = std::max(amax, rad2deg(c.angle.maxCoeff()));
  }
  const double ytop = std::ceil(top / 5.0) * 5.0;
  const double ybot = ytop - 40.0;
  const double W = 800, H = 500, L = 70, R = 220, T = 30, B = 50;
  auto px = [&](double deg) { return L + (deg - amin) / (amax - amin) * (W - L - R); };
  auto py = [&](double db) { return T + (ytop - std::clamp(db, ybot, ytop)) / (ytop - ybot) * (H - T - B); };

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
                                             "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
  std::string s = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      num(W), num(H));
  s += "<g class=\"axes\" stroke=\"#999\" stroke-width=\"0.5\">\n";
  for (double db = ybot; db <= ytop + 1e-9; db += 5.0) {
    s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", num(L), num(py(db)), num(W - R), num(py(db)));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\" stroke=\"none\">{}</text>\n", num(L - 5),
                     num(py(db) + 4), num(db));
  }
  const double step = (amax - amin) > 120 ? 30.0 : 10.0;
  for (double a = std::ceil(amin / step) * step; a <= amax + 1e-9; a += step) {
    s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>", num(px(a)), num(T), num(px(a)), num(H - B));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\">{}</text>\n", num(px(a)),
                     num(H - B + 16), num(a));
  }
  s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\">theta (deg)</text>\n",
                   num((L + W - R) / 2), num(H - 10));
  s += fmt::format("<text x=\"15\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\" transform=\"rotate(-90 15 {})\">"
                   "relative gain estimate (dB)</text>\n",
                   num((T + H - B) / 2), num((T + H - B) / 2));
  s += "</g>\n";

  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const auto& c = cuts[k];
    const char* color = kColors[k % std::size(kColors)];
    s += fmt::format("<polyline class=\"trace\" data-label=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"",
                     xml_escape(c.label), color);
    for (Eigen::Index i = 0; i < c.angle.size(); ++i)
      s += fmt::format("{},{} ", num(px(rad2deg(c.angle[i]))), num(py(c.value_db[i])));
    s += "\"/>\n";
    const double ly = T + 10 + 18.0 * double(k);
    s += fmt::format("<g class=\"legend\"><line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>"
                     "<text x=\"{}\" y=\"{}\">{}</text></g>\n",
                     num(W - R + 10), num(ly), num(W - R + 35), num(ly), color, num(W - R + 40), num(ly + 4),
                     xml_escape(c.label));
  }
  s += "</svg>\n";
  return s;
}

void write_pattern_plot(std::span<const PatternCut> cuts, const std::filesystem::path& path) {
  write_file_atomic(path, pattern_plot_svg(cuts));
}

void write_pattern_plot(const FarFieldPattern& pattern, double cut_phi, const std::filesystem::path& path) {
  PatternCut c = extract_cut(pattern, cut_phi);
  c.label = fmt::format("{:g} GHz, phi {:g} deg", pattern.frequency / 1e9, rad2deg(cut_phi));
  write_pattern_plot(std::span<const PatternCut>(&c, 1), path);
}

}  // namespace camv
