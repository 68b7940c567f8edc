#include <doctest.h>

#include <filesystem>
#include <map>
#include <regex>

#include "camv/errors.hpp"
#include "camv/io_export.hpp"
#include "camv/textio.hpp"
#include "oracles.hpp"

using namespace camv;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

/// Each directed index edge used once, its reverse used once.
bool index_watertight(const TriangleMesh& m) {
  std::map<std::pair<int, int>, int> e;
  for (Eigen::Index t = 0; t < m.facet_count(); ++t)
    for (int k = 0; k < 3; ++k) ++e[{m.triangles(k, t), m.triangles((k + 1) % 3, t)}];
  for (const auto& [edge, n] : e) {
    if (n != 1) return false;
    const auto it = e.find({edge.second, edge.first});
    if (it == e.end() || it->second != 1) return false;
  }
  return true;
}

Polyline2d square(double s) {
  Polyline2d p;
  p.points.resize(2, 4);
  p.points << 0, s, s, 0, 0, 0, s, s;
  p.closed = true;
  return p;
}

}  // namespace

TEST_CASE("extruded box") {
  const TriangleMesh m = extrude_profile(square(2.0), 3.0);
  CHECK(m.facet_count() == 12);
  CHECK(index_watertight(m));
  CHECK(m.signed_volume() == doctest::Approx(12.0).epsilon(1e-14));
  // Normals point away from the centroid.
  const Eigen::Vector3d c(1, 1, 1.5);
  for (Eigen::Index t = 0; t < m.facet_count(); ++t) {
    const Eigen::Vector3d mid =
        (m.vertices.col(m.triangles(0, t)) + m.vertices.col(m.triangles(1, t)) + m.vertices.col(m.triangles(2, t))) / 3;
    CHECK(m.normals.col(t).dot(mid - c) > 0);
    CHECK(m.normals.col(t).norm() == doctest::Approx(1.0));
  }
  // Clockwise input is reoriented.
  Polyline2d cw = square(2.0);
  cw.points = cw.points.rowwise().reverse().eval();
  CHECK(extrude_profile(cw, 3.0).signed_volume() == doctest::Approx(12.0));
}

TEST_CASE("extrusion of the corrugated element") {
  const ElementParams p = camv_table1();
  const Polyline2d prof = element_profile(p, true);
  const TriangleMesh m = extrude_profile(prof, p.thickness);
  CHECK(index_watertight(m));
  const double expected = signed_area(prof.points) * p.thickness;
  CHECK(std::abs(m.signed_volume() - expected) <= 1e-9 * expected);
  // Cap triangulation covers the profile exactly.
  CHECK(m.facet_count() == 2 * (remove_collinear(prof.points).cols() - 2) + 2 * remove_collinear(prof.points).cols());
}

TEST_CASE("extrusion rejects bad profiles") {
  Polyline2d open = square(1.0);
  open.closed = false;
  CHECK_THROWS_AS(extrude_profile(open, 1.0), GeometryError);
  Polyline2d bowtie;
  bowtie.points.resize(2, 4);
  bowtie.points << 0, 1, 1, 0, 0, 1, 0, 1;
  bowtie.closed = true;
  CHECK_THROWS_AS(extrude_profile(bowtie, 1.0), GeometryError);
  CHECK_THROWS_AS(extrude_profile(square(1.0), 0.0), std::domain_error);
}

TEST_CASE("ear clipping of a non-convex ring") {
  // Comb with three teeth.
  Eigen::Matrix2Xd ring(2, 12);
  ring << 0, 7, 7, 6, 6, 4, 4, 3, 3, 1, 1, 0,  //
      0, 0, 5, 5, 1, 1, 5, 5, 1, 1, 5, 5;
  const auto tris = ear_clip(ring);
  CHECK(tris.size() == 10);
  double area = 0;
  for (const auto& t : tris) {
    const Eigen::Vector2d a = ring.col(t[0]), b = ring.col(t[1]), c = ring.col(t[2]);
    const double cr = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
    CHECK(cr > 0);
    area += cr / 2;
  }
  CHECK(area == doctest::Approx(signed_area(ring)));
  CHECK(ear_clip(ring) == tris);
  CHECK_THROWS_AS(ear_clip(ring.rowwise().reverse().eval()), GeometryError);
}

TEST_CASE("binary STL") {
  const ElementParams p = camv_table1();
  const TriangleMesh m = extrude_profile(element_profile(p, true), p.thickness);
  const std::string bytes = stl_bytes(m, StlMode::binary);
  CHECK(bytes.size() == 84 + 50 * std::size_t(m.facet_count()));
  CHECK(bytes.rfind("solid", 0) == std::string::npos);
  CHECK(bytes.substr(0, 80).find("units=mm") != std::string::npos);
  CHECK(stl_bytes(m, StlMode::binary) == bytes);

  std::vector<oracle::StlFacet> facets;
  REQUIRE(oracle::parse_binary_stl(bytes, facets));
  REQUIRE(facets.size() == std::size_t(m.facet_count()));
  for (Eigen::Index t = 0; t < m.facet_count(); ++t)
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < 3; ++k)
        CHECK(facets[t].v[v][k] == static_cast<float>(m.vertices(k, m.triangles(v, t))));
  CHECK(oracle::facets_watertight(facets));

  const auto dir = std::filesystem::temp_directory_path() / "camv_test_io";
  std::filesystem::create_directories(dir);
  write_stl(m, dir / "a.stl", StlMode::binary);
  write_stl(m, dir / "b.stl", StlMode::binary);
  CHECK(read_text_file(dir / "a.stl") == read_text_file(dir / "b.stl"));
  CHECK(std::filesystem::file_size(dir / "a.stl") == bytes.size());
}

TEST_CASE("ASCII STL") {
  const TriangleMesh m = extrude_profile(square(1.0), 0.5);
  const std::string text = stl_bytes(m, StlMode::ascii);
  CHECK(text.rfind("solid camv units=mm\n", 0) == 0);
  CHECK(count_of(text, "facet normal") == 12);
  CHECK(count_of(text, "vertex ") == 36);
  CHECK(text.find("endsolid") != std::string::npos);
}

TEST_CASE("STL refuses empty meshes") {
  TriangleMesh empty;
  CHECK_THROWS_AS(stl_bytes(empty, StlMode::binary), GeometryError);
  const auto path = std::filesystem::temp_directory_path() / "camv_test_io" / "empty.stl";
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_stl(empty, path, StlMode::ascii), GeometryError);
  CHECK_FALSE(std::filesystem::exists(path));
}

TEST_CASE("profile SVG") {
  const ElementParams p = camv_table1();
  const auto slots = corrugation_slots(p);
  const std::string svg = profile_svg(element_profile(p, true), slots);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(count_of(svg, "class=\"corrugation-slot\"") == 9);
  CHECK(svg.find(">mm<") != std::string::npos);
  CHECK(count_of(profile_svg(element_profile(p, false)), "corrugation-slot") == 0);
  CHECK(profile_svg(element_profile(p, true), slots) == svg);
}

TEST_CASE("pattern plot") {
  std::vector<PatternCut> cuts(2);
  for (int k = 0; k < 2; ++k) {
    cuts[k].label = k ? "30 GHz, scan 30 deg" : "26 GHz <broadside>";
    cuts[k].angle = Eigen::VectorXd::LinSpaced(181, -1.5707963, 1.5707963);
    cuts[k].value_db = -cuts[k].angle.array().square() * 10.0 + 10.0 * k;
  }
  const std::string svg = pattern_plot_svg(cuts);
  CHECK(count_of(svg, "class=\"trace\"") == 2);
  CHECK(svg.find("30 GHz, scan 30 deg") != std::string::npos);
  CHECK(svg.find("26 GHz &lt;broadside&gt;") != std::string::npos);
  CHECK_THROWS_AS(pattern_plot_svg({}), std::invalid_argument);
  cuts[1].value_db.resize(0);
  cuts[1].angle.resize(0);
  CHECK_THROWS_AS(pattern_plot_svg(cuts), std::invalid_argument);
}
