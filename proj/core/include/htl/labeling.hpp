#pragma once

// Labelings of polygon families and the combinatorial conditions that make
// them glue into a closed surface tiled by k-gons with three at each vertex.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "htl/errors.hpp"

namespace htl {

using Label = std::int32_t;
using Polygon = std::vector<Label>;

/// Smallest polygon size accepted by strict verification.
inline constexpr std::size_t kMinPolygonSize = 7;

/// An edge of one polygon: it runs from the vertex at `position` to the vertex
/// at `position + 1` (cyclically) in the polygon's positive boundary order.
struct EdgeRef {
  std::size_t polygon = 0;
  std::size_t position = 0;

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// A corner slot, i.e. one vertex of one polygon.
struct CornerRef {
  std::size_t polygon = 0;
  std::size_t position = 0;

  friend auto operator<=>(const CornerRef&, const CornerRef&) = default;
};

/// n cyclic label sequences over the labels 1..m, stored in positive boundary
/// order. Values are immutable once constructed.
class Labeling {
 public:
  Labeling() = default;

  /// m is taken as the largest label present.
  explicit Labeling(std::vector<Polygon> polygons);

  /// Throws StructuralError when a polygon is empty or a label falls outside 1..m.
  Labeling(std::vector<Polygon> polygons, Label label_count);

  const std::vector<Polygon>& polygons() const noexcept { return polygons_; }
  std::span<const Label> polygon(std::size_t index) const { return polygons_.at(index); }
  std::size_t polygon_count() const noexcept { return polygons_.size(); }
  std::size_t polygon_size(std::size_t index) const { return polygons_.at(index).size(); }

  /// m, the number of labels.
  Label label_count() const noexcept { return label_count_; }

  /// T, the total number of vertices (and edges).
  std::size_t vertex_count() const noexcept;

  /// The common polygon size when all polygons have the same size.
  std::optional<std::size_t> regular_size() const noexcept;

  Label at(CornerRef corner) const { return polygons_.at(corner.polygon).at(corner.position); }
  Label tail(EdgeRef edge) const;
  Label head(EdgeRef edge) const;

  /// Per-label occurrence counts, indexed by label (index 0 unused).
  std::vector<std::size_t> occurrence_counts() const;

  /// True when some polygon has two cyclically consecutive equal labels.
  bool has_equal_neighbours() const noexcept;

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling& a, const Labeling& b) {
    if (auto c = a.polygons_ <=> b.polygons_; c != 0) return c;
    return a.label_count_ <=> b.label_count_;
  }

 private:
  std::vector<Polygon> polygons_;
  Label label_count_ = 0;
};

std::string to_string(const Labeling& labeling);

// ---------------------------------------------------------------------------
// Edges and orientation

struct EdgeRecord {
  EdgeRef edge;
  Label tail_label = 0;
  Label head_label = 0;
  /// +1 when the intrinsic direction (smaller label to larger label, or the
  /// boundary direction for equal labels) agrees with the boundary direction.
  int intrinsic_sign = 1;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

int intrinsic_sign(Label tail_label, Label head_label) noexcept;

/// All T edge records, polygon by polygon in boundary order.
std::vector<EdgeRecord> edges(const Labeling& labeling);

// ---------------------------------------------------------------------------
// Verification

enum class Condition : std::uint8_t {
  kOccurrence,      // every label occurs exactly three times
  kConnected,       // no proper subset of polygons is closed under labels
  kRuns,            // maximal equal-label runs have length 1 or 3
  kEdgePairs,       // each unordered label pair {i, j}, i != j, spans 0 or 2 edges
  kNeighbours,      // no vertex has both neighbours carrying one other label
  kEvenLabelCount,  // m is even
  kVertexTotal,     // T = 3m
  kMinimumSize,     // every polygon has at least kMinPolygonSize vertices
  kLabelRange,      // every label of 1..m occurs
};

inline constexpr std::size_t kConditionCount = 9;

/// Short identifier such as "(i)" or "m-even".
std::string_view condition_name(Condition condition) noexcept;

/// Polygon and position fields are 0-based; describe() prints them 1-based.
struct Violation {
  Condition condition = Condition::kOccurrence;
  std::optional<std::size_t> polygon;
  std::optional<std::size_t> position;
  std::vector<Label> labels;
  /// Occurrence / edge / run count where meaningful.
  std::optional<std::size_t> count;
  /// Polygons of a closed subset for connectivity violations.
  std::vector<std::size_t> polygons;

  std::string describe() const;
};

enum class SizeMode : std::uint8_t { kStrict, kRelaxed };

struct VerificationReport {
  std::array<bool, kConditionCount> verdicts{};
  std::vector<Violation> violations;
  bool proper = false;
  /// Meaningful only when proper.
  bool oriented = false;

  bool passed(Condition condition) const noexcept {
    return verdicts[static_cast<std::size_t>(condition)];
  }
  std::vector<Violation> violations_of(Condition condition) const;
  std::optional<Condition> first_failure() const noexcept;
};

/// Collects every violation of every condition. Subset enumeration decides
/// connectivity for n <= 12; larger inputs use label-sharing components.
VerificationReport verify(const Labeling& labeling, SizeMode size_mode = SizeMode::kStrict);

/// Connectivity checked literally: every non-empty proper subset of polygons
/// sees some label once or twice.
bool connected_by_subsets(const Labeling& labeling);

/// Connectivity of the graph joining polygons that share a label. Agrees with
/// connected_by_subsets whenever every label occurs exactly three times.
bool connected_by_components(const Labeling& labeling);

// ---------------------------------------------------------------------------
// Proper pairs

enum class PairKind : std::uint8_t { kDistinctLabels, kFold };

struct ProperPair {
  EdgeRef first;
  EdgeRef second;
  PairKind kind = PairKind::kDistinctLabels;

  friend bool operator==(const ProperPair&, const ProperPair&) = default;
};

class PairingTable {
 public:
  PairingTable() = default;
  PairingTable(std::vector<ProperPair> pairs, std::vector<std::size_t> offsets);

  const std::vector<ProperPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  EdgeRef partner(EdgeRef edge) const;
  const ProperPair& pair_of(EdgeRef edge) const;

 private:
  std::size_t slot(EdgeRef edge) const { return offsets_.at(edge.polygon) + edge.position; }

  std::vector<ProperPair> pairs_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> pair_index_;
};

/// Refuses non-proper input with NotProperError naming the first failed condition.
PairingTable pairing(const Labeling& labeling, SizeMode size_mode = SizeMode::kStrict);

/// Pairing without re-running verification. Caller guarantees properness.
PairingTable pairing_unchecked(const Labeling& labeling);

/// True iff every proper pair joins a positively and a negatively oriented edge.
bool oriented(const Labeling& labeling, SizeMode size_mode = SizeMode::kStrict);

// ---------------------------------------------------------------------------
// Canonical forms

/// Lexicographically least labeling over polygon reordering, cyclic rotation,
/// global reflection (when enabled) and label renaming.
Labeling canonicalize(const Labeling& labeling, bool allow_reflection = true);

/// Every polygon reversed, which is how reflection is represented.
Labeling reflect(const Labeling& labeling);

/// Lexicographically least first-occurrence relabeling of one polygon over its
/// rotations (and reversals when enabled), ignoring the other polygons.
Polygon minimal_polygon_form(std::span<const Label> polygon, bool allow_reflection = true);

}  // namespace htl
