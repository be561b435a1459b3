#pragma once

// Exhaustive oracles: backtracking search for proper labelings of small
// families, and double walks on cubic graphs.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "htl/labeling.hpp"

namespace htl {

enum class SearchStatus : std::uint8_t {
  kComplete,      // the whole space was explored
  kLimitReached,  // stopped after `limit` distinct canonical forms
  kIncomplete,    // budget exhausted; the result proves nothing
};

std::string_view status_name(SearchStatus status) noexcept;

struct SearchOptions {
  bool oriented_only = false;
  /// Skip labelings with two equal consecutive labels (no folds).
  bool fold_free = false;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  /// Largest n * k attempted.
  std::size_t max_slots = 24;
  /// Node budget; 0 means unbounded.
  std::uint64_t node_budget = 0;
  unsigned threads = 1;
  /// kRelaxed admits k < 7.
  SizeMode size_mode = SizeMode::kStrict;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kComplete;
  /// Canonical forms, sorted and distinct.
  std::vector<Labeling> labelings;
  std::uint64_t nodes = 0;
  /// Why the search was cut short or skipped, when it was.
  std::string note;
};

/// Every proper labeling of n k-gons up to polygon order, rotation,
/// reflection and renaming.
SearchResult search_labelings(std::size_t k, std::size_t n, const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Cubic graphs and double walks

enum class GraphDefect : std::uint8_t { kDegree, kDisconnected, kLoop, kParallel, kRange };

class GraphError : public PreconditionError {
 public:
  GraphError(GraphDefect defect, const std::string& message) : PreconditionError(message), defect_(defect) {}
  GraphDefect defect() const noexcept { return defect_; }

 private:
  GraphDefect defect_;
};

/// Vertices are 0..vertex_count-1; edges keep their input order.
struct CubicGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Edge indices at each vertex, in edge order.
  std::vector<std::vector<std::size_t>> incidence() const;
};

/// Validates degree 3 everywhere, no loops, connectivity and (unless allowed)
/// no parallel edges. Throws GraphError naming the first defect found.
CubicGraph make_cubic_graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
                            bool allow_parallel = false);

CubicGraph complete_graph_k4();

/// Closed walk: step i leaves vertices[i] along edges[i] and arrives at
/// vertices[i+1] (cyclically).
struct DoubleWalk {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  friend bool operator==(const DoubleWalk&, const DoubleWalk&) = default;
};

/// Each edge used exactly twice, consecutive edges distinct (cyclically); with
/// both_directions, each edge once each way.
bool is_double_walk(const CubicGraph& graph, const DoubleWalk& walk, bool both_directions = false);

/// First double walk in a fixed search order, or none after a complete search.
std::optional<DoubleWalk> double_hamiltonian(const CubicGraph& graph, bool both_directions = false,
                                             unsigned threads = 1);

/// Every double walk starting at vertex 0, in search order, up to `limit`.
/// Each closed walk appears once per starting occurrence of vertex 0 and per
/// direction.
std::vector<DoubleWalk> double_walks(const CubicGraph& graph, bool both_directions = false,
                                     std::size_t limit = std::numeric_limits<std::size_t>::max());

/// The single polygon read off the walk, labels = vertex + 1. Throws
/// PreconditionError for an invalid walk.
Labeling walk_to_labeling(const CubicGraph& graph, const DoubleWalk& walk);

/// Inverse of walk_to_labeling: one polygon, k divisible by 6, no equal
/// neighbours, proper. Graph edges are sorted pairs in lexicographic order.
std::pair<CubicGraph, DoubleWalk> labeling_to_walk(const Labeling& labeling);

}  // namespace htl
