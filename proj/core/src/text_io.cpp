#include <charconv>
#include <limits>

#include "htl/io.hpp"

namespace htl {

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

// Splits on LF; a missing final LF is tolerated, CR is not.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto end = text.find('\n');
    const auto line = text.substr(0, end);
    if (const auto cr = line.find('\r'); cr != std::string_view::npos) {
      throw ParseError("carriage return; lines must end with LF only", number, cr + 1);
    }
    out.push_back({line, number++});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokens(const Line& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto& s = line.text;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    out.push_back({s.substr(start, i - start), start + 1});
  }
  return out;
}

std::int64_t integer(const Token& t, const Line& line, const char* what) {
  std::int64_t value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(std::string(what) + " is not an integer: '" + std::string(t.text) + "'", line.number, t.column);
  }
  return value;
}

bool is_comment(const Line& l) { return !l.text.empty() && l.text.front() == '#'; }

}  // namespace

Labeling parse_htl(std::string_view text, const ParseOptions& options) {
  std::vector<Line> lines;
  for (const auto& l : split_lines(text)) {
    if (!is_comment(l)) lines.push_back(l);
  }
  if (lines.empty() || lines[0].text != "HTL 1") {
    throw ParseError("malformed header; expected 'HTL 1'", lines.empty() ? 1 : lines[0].number, 1);
  }
  if (lines.size() < 2) throw ParseError("missing '<n> <m>' line", lines[0].number + 1, 1);

  const Line& dims = lines[1];
  const auto dim_tokens = tokens(dims);
  if (dim_tokens.size() != 2) throw ParseError("expected '<n> <m>'", dims.number, 1);
  const std::int64_t n = integer(dim_tokens[0], dims, "polygon count");
  const std::int64_t m = integer(dim_tokens[1], dims, "label count");
  if (n < 1) throw ParseError("polygon count must be positive", dims.number, dim_tokens[0].column);
  if (m < 1 || m > std::numeric_limits<Label>::max()) {
    throw ParseError("label count out of range", dims.number, dim_tokens[1].column);
  }

  const std::size_t body = lines.size() - 2;
  if (body != static_cast<std::size_t>(n)) {
    const std::size_t at = body < static_cast<std::size_t>(n) ? lines.back().number + 1 : lines[2 + n].number;
    throw ParseError("expected " + std::to_string(n) + " polygon lines, found " + std::to_string(body), at, 1);
  }

  std::vector<Polygon> polys;
  std::size_t total = 0;
  for (std::size_t j = 2; j < lines.size(); ++j) {
    const auto toks = tokens(lines[j]);
    if (toks.empty()) throw ParseError("empty polygon line", lines[j].number, 1);
    Polygon poly;
    for (const auto& t : toks) {
      const auto v = integer(t, lines[j], "label");
      if (v < 1 || v > m) {
        throw ParseError("label " + std::string(t.text) + " outside 1.." + std::to_string(m), lines[j].number, t.column);
      }
      poly.push_back(static_cast<Label>(v));
    }
    total += poly.size();
    polys.push_back(std::move(poly));
  }
  if (options.require_vertex_total && total != 3 * static_cast<std::size_t>(m)) {
    throw ParseError("total " + std::to_string(total) + " vertices != 3m = " + std::to_string(3 * m), dims.number,
                     dim_tokens[1].column);
  }
  return Labeling(std::move(polys), static_cast<Label>(m));
}

std::string emit_htl(const Labeling& labeling) {
  std::string out = "HTL 1\n";
  out += std::to_string(labeling.polygon_count()) + " " + std::to_string(labeling.label_count()) + "\n";
  for (const auto& poly : labeling.polygons()) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(poly[i]);
    }
    out += '\n';
  }
  return out;
}

CubicGraph parse_graph(std::string_view text, bool allow_parallel) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t vertices = 0;
  for (const auto& line : split_lines(text)) {
    if (is_comment(line)) continue;
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError("expected 'u v'", line.number, 1);
    const auto u = integer(toks[0], line, "vertex id");
    const auto v = integer(toks[1], line, "vertex id");
    if (u < 1) throw ParseError("vertex ids are 1-based", line.number, toks[0].column);
    if (v < 1) throw ParseError("vertex ids are 1-based", line.number, toks[1].column);
    edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    vertices = std::max({vertices, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  return make_cubic_graph(vertices, std::move(edges), allow_parallel);
}

std::string emit_graph(const CubicGraph& graph) {
  std::string out;
  for (const auto& [u, v] : graph.edges) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

}  // namespace htl
