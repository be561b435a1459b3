#pragma once

// Local rewrites that enlarge polygons while keeping a labeling proper.
//
// A triangle site is a label w whose three occurrences read x w y, y w z and
// z w x along the boundaries (each path in either direction). Operations (a)
// and (b) replace the centre of each path; operation (c) subdivides both edges
// of a distinct-label proper pair.

#include <array>
#include <optional>
#include <vector>

#include "htl/labeling.hpp"

namespace htl {

struct PathWitness {
  std::size_t polygon = 0;
  /// Position of the occurrence of w.
  std::size_t center = 0;
  /// True when the path is read against the positive boundary order.
  bool reversed = false;

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

struct TriangleSite {
  Label w = 0;
  Label x = 0;
  Label y = 0;
  Label z = 0;
  /// Witnesses for x w y, y w z and z w x, in that order.
  std::array<PathWitness, 3> paths{};

  friend bool operator==(const TriangleSite&, const TriangleSite&) = default;
};

/// All triangle sites, ordered by w. Within a site x < y < z.
std::vector<TriangleSite> triangle_sites(const Labeling& labeling);

/// The triangle site centred at w, if the neighbourhood of w forms one.
std::optional<TriangleSite> triangle_site_at(const Labeling& labeling, Label w);

/// Operation (a): two new labels; each path grows by two vertices.
Labeling apply_a(const Labeling& labeling, const TriangleSite& site);

/// Operation (b): four new labels; each path grows by four vertices.
/// Preserves orientedness of the labeling.
Labeling apply_b(const Labeling& labeling, const TriangleSite& site);

/// Middle segments that replace the single vertex w on each path, written over
/// the symbols w = 0, new labels m+1.. = 1.. . Exposed for tests and docs.
struct Replacement {
  std::array<std::vector<int>, 3> middles;
  int new_labels = 0;
};
const Replacement& replacement_a();
const Replacement& replacement_b();

struct PairSite {
  EdgeRef e;
  EdgeRef f;
  /// x < y are the endpoint labels shared by e and f.
  Label x = 0;
  Label y = 0;

  friend bool operator==(const PairSite&, const PairSite&) = default;
};

/// Every distinct-label proper pair, ordered by (x, y).
std::vector<PairSite> pair_sites(const Labeling& labeling);

enum class LongSide : std::uint8_t { kE, kF };

/// Operation (c): the long-side edge becomes x a b b b a y, the other x a y,
/// with a = m+1 and b = m+2.
Labeling apply_c(const Labeling& labeling, const PairSite& site, LongSide long_side);

}  // namespace htl
