#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "camv/farfield.hpp"
#include "camv/geometry.hpp"
#include "camv/polygon.hpp"

namespace camv {

/// Triangle mesh in mm. Column t of `triangles` indexes into `vertices`,
/// wound counter-clockwise seen from outside; `normals` holds unit facet normals.
struct TriangleMesh {
  Eigen::Matrix3Xd vertices;
  Eigen::Matrix3Xi triangles;
  Eigen::Matrix3Xd normals;

  Eigen::Index facet_count() const { return triangles.cols(); }
  double signed_volume() const;
  void validate() const;
};

/// Linear extrusion of a closed simple profile from z = 0 to z = thickness:
/// ear-clipped caps plus two triangles per side edge.
TriangleMesh extrude_profile(const Polyline2d& profile, double thickness);

enum class StlMode { ascii, binary };

/// ASCII or little-endian binary STL (80-byte header, uint32 count,
/// 50-byte facets). Refuses empty meshes.
void write_stl(const TriangleMesh& mesh, const std::filesystem::path& path, StlMode mode);
std::string stl_bytes(const TriangleMesh& mesh, StlMode mode);

/// Standalone SVG of a profile with mm-ticked axes. Corrugation slots, when
/// given, are overlaid as `corrugation-slot` outlines.
void write_profile_svg(const Polyline2d& profile, const std::filesystem::path& path,
                       std::span<const CorrugationSlot> slots = {});
std::string profile_svg(const Polyline2d& profile, std::span<const CorrugationSlot> slots = {});

/// dB-vs-angle plot, one labelled trace per cut.
void write_pattern_plot(std::span<const PatternCut> cuts, const std::filesystem::path& path);
void write_pattern_plot(const FarFieldPattern& pattern, double cut_phi, const std::filesystem::path& path);
std::string pattern_plot_svg(std::span<const PatternCut> cuts);

}  // namespace camv
