#pragma once

// Text formats.
//
// HTL documents:
//   HTL 1
//   <n> <m>
//   one line per polygon, labels separated by single spaces
// Lines starting with '#' are comments. Lines end with LF.
//
// Graph edge lists: one "u v" pair per line, vertex ids 1-based.

#include <string>
#include <string_view>

#include "htl/labeling.hpp"
#include "htl/search.hpp"

namespace htl {

struct ParseOptions {
  /// Reject documents whose vertex total differs from 3m. Turning this off lets
  /// broken labelings through to verify, which then reports them.
  bool require_vertex_total = true;
};

/// Throws ParseError with line and column for malformed input.
Labeling parse_htl(std::string_view text, const ParseOptions& options = {});

/// Canonical text: no comments, single spaces, LF after every line.
std::string emit_htl(const Labeling& labeling);

/// Parses and validates a cubic graph. Token errors throw ParseError; graph
/// defects throw GraphError.
CubicGraph parse_graph(std::string_view text, bool allow_parallel = false);

/// One "u v" line per edge, 1-based.
std::string emit_graph(const CubicGraph& graph);

}  // namespace htl
