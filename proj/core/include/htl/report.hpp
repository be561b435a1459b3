#pragma once

// Analysis records and schematic drawings of labelings.

#include <optional>
#include <string>
#include <vector>

#include "htl/geom.hpp"
#include "htl/labeling.hpp"

namespace htl {

struct Topology {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long chi = 0;
  bool orientable = false;
  long genus = 0;
  long crosscaps = 0;
};

struct Analysis {
  std::size_t n = 0;
  Label m = 0;
  std::optional<std::size_t> k;  // set when every polygon has the same size
  std::vector<std::size_t> sizes;
  bool proper = false;
  std::vector<Violation> violations;  // filled only when not proper
  bool oriented_labeling = false;
  std::optional<Topology> topology;
  std::optional<PiMultiple> area;  // 2*pi*|chi| for hyperbolic surfaces
  /// Triangle count of the dual tiling, t = m.
  std::size_t triangles = 0;
  std::optional<bool> eek_admissible;
  std::optional<std::int64_t> n_min;
  std::optional<bool> minimal;  // n == n_min(k)
  std::optional<bool> triangle_bound_equality;
  std::optional<std::int64_t> subgroup_index;  // 2Nk, when minimal
  /// Orientable and of the least area any orientable tiling can have.
  std::optional<bool> oriented_minimal;
};

Analysis analyze(const Labeling& labeling, SizeMode size_mode = SizeMode::kStrict);

/// JSON text of analyze(); exact areas appear as "p/q·π" next to a float.
std::string analyze_export(const Labeling& labeling, SizeMode size_mode = SizeMode::kStrict);

inline constexpr std::size_t kMaxRenderedPolygons = 24;

/// SVG 1.1 drawing: each polygon as a regular polygon with its labels, edges of
/// one proper pair sharing a colour and a "pair-<i>" class. Requires a proper
/// labeling with at most kMaxRenderedPolygons polygons.
std::string render_svg(const Labeling& labeling, SizeMode size_mode = SizeMode::kStrict);

}  // namespace htl
