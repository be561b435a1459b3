#pragma once

// The closed surface obtained by gluing a proper labeling, its topology, its
// dual triangle tiling and the orientation double cover.

#include <array>
#include <optional>
#include <vector>

#include "htl/labeling.hpp"

namespace htl {

/// One identification of two polygon edges. Signs are the intrinsic signs of
/// the two edges in their polygons.
struct EdgeGluing {
  EdgeRef e;
  EdgeRef f;
  int sign_e = 1;
  int sign_f = 1;
};

struct GluedSurface {
  /// Partition of all corner slots, each class sorted, classes ordered by
  /// their smallest corner.
  std::vector<std::vector<CornerRef>> vertex_classes;
  std::vector<EdgeGluing> gluings;
  std::size_t polygon_count = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long chi = 0;
  bool orientable = false;
  /// A +-1 per polygon witnessing orientability; empty when non-orientable.
  std::vector<int> polygon_signs;
  bool label_class_match = false;
  bool connected = false;
};

/// Identifies proper pairs tail to tail along their intrinsic directions.
/// Refuses non-proper input.
GluedSurface glue(const Labeling& labeling, SizeMode size_mode = SizeMode::kStrict);

struct Orientability {
  bool orientable = false;
  std::vector<int> polygon_signs;
};

/// Two-colours polygons so every gluing reverses the induced boundary
/// directions: sign(P_e) * sign(e) = -sign(P_f) * sign(f).
Orientability orientability(const GluedSurface& surface);

struct SurfaceType {
  bool orientable = false;
  /// Handle count when orientable, cross-cap count otherwise.
  long genus = 0;
  long crosscaps = 0;
};

/// Classification from chi and orientability; throws ConsistencyError when
/// the two disagree (odd chi on an orientable surface, chi > 2, ...).
SurfaceType classify(const GluedSurface& surface);
SurfaceType classify(long chi, bool orientable);

struct DualTriangle {
  Label label = 0;
  /// Polygons around the vertex `label`, in rotation order.
  std::array<std::size_t, 3> polygons{};
};

struct DualTiling {
  std::vector<DualTriangle> triangles;
  /// One entry per glued edge: the two triangles it separates (equal for folds).
  std::vector<std::pair<Label, Label>> adjacency;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long chi = 0;
};

/// Triangle tiling dual to a regular labeling whose vertex classes are its
/// label classes.
DualTiling dual(const GluedSurface& surface, const Labeling& labeling);

/// Polygons with witness sign -1 reversed; the result is an oriented labeling
/// of the same surface when the surface is orientable.
Labeling reorient(const Labeling& labeling, const std::vector<int>& polygon_signs);

/// Topology of the orientation double cover computed from the lifted gluing.
/// Works for every non-orientable proper labeling.
GluedSurface cover_surface(const Labeling& labeling);

/// Proper labeling of the orientation double cover: the original polygons
/// followed by their reversed copies, labels numbered by cover vertex class.
/// Throws PreconditionError when the input is already orientable and
/// NotRepresentableError when fold pairs lift to parallel edges.
Labeling double_cover(const Labeling& labeling);

}  // namespace htl
