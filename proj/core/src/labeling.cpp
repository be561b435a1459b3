#include "htl/labeling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace htl {

namespace {

std::size_t next_index(std::size_t i, std::size_t size) { return i + 1 == size ? 0 : i + 1; }
std::size_t prev_index(std::size_t i, std::size_t size) { return i == 0 ? size - 1 : i - 1; }

std::uint64_t pair_key(Label a, Label b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

struct Run {
  std::size_t start;
  std::size_t length;
  Label label;
};

// Maximal cyclic runs of equal labels. A polygon made of a single label is one
// run covering the whole polygon.
std::vector<Run> cyclic_runs(std::span<const Label> poly) {
  std::vector<Run> runs;
  const std::size_t k = poly.size();
  if (k == 0) return runs;
  std::size_t start = 0;
  while (start < k && poly[start] == poly[prev_index(start, k)]) ++start;
  if (start == k) {
    runs.push_back({0, k, poly[0]});
    return runs;
  }
  std::size_t i = start;
  do {
    std::size_t len = 1;
    while (poly[(i + len) % k] == poly[i]) ++len;
    runs.push_back({i, len, poly[i]});
    i = (i + len) % k;
  } while (i != start);
  return runs;
}

Label max_label(const std::vector<Polygon>& polygons) {
  Label out = 0;
  for (const auto& poly : polygons) {
    for (Label l : poly) out = std::max(out, l);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Labeling::Labeling(std::vector<Polygon> polygons) : Labeling(polygons, max_label(polygons)) {}

Labeling::Labeling(std::vector<Polygon> polygons, Label label_count)
    : polygons_(std::move(polygons)), label_count_(label_count) {
  if (polygons_.empty()) throw StructuralError("labeling has no polygons");
  if (label_count_ < 1) throw StructuralError("label count must be positive");
  for (std::size_t p = 0; p < polygons_.size(); ++p) {
    if (polygons_[p].empty()) {
      throw StructuralError("polygon " + std::to_string(p) + " is empty");
    }
    for (std::size_t i = 0; i < polygons_[p].size(); ++i) {
      const Label l = polygons_[p][i];
      if (l < 1 || l > label_count_) {
        throw StructuralError("label " + std::to_string(l) + " at polygon " + std::to_string(p) +
                              ", position " + std::to_string(i) + " is outside 1.." +
                              std::to_string(label_count_));
      }
    }
  }
}

std::size_t Labeling::vertex_count() const noexcept {
  std::size_t total = 0;
  for (const auto& poly : polygons_) total += poly.size();
  return total;
}

std::optional<std::size_t> Labeling::regular_size() const noexcept {
  if (polygons_.empty()) return std::nullopt;
  const std::size_t k = polygons_.front().size();
  for (const auto& poly : polygons_) {
    if (poly.size() != k) return std::nullopt;
  }
  return k;
}

Label Labeling::tail(EdgeRef edge) const { return polygons_.at(edge.polygon).at(edge.position); }

Label Labeling::head(EdgeRef edge) const {
  const auto& poly = polygons_.at(edge.polygon);
  return poly.at(next_index(edge.position, poly.size()));
}

std::vector<std::size_t> Labeling::occurrence_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(label_count_) + 1, 0);
  for (const auto& poly : polygons_) {
    for (Label l : poly) ++counts[static_cast<std::size_t>(l)];
  }
  return counts;
}

bool Labeling::has_equal_neighbours() const noexcept {
  for (const auto& poly : polygons_) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == poly[next_index(i, poly.size())]) return true;
    }
  }
  return false;
}

std::string to_string(const Labeling& labeling) {
  std::ostringstream out;
  for (std::size_t p = 0; p < labeling.polygon_count(); ++p) {
    if (p != 0) out << " | ";
    const auto poly = labeling.polygon(p);
    for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? "," : "") << poly[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------

int intrinsic_sign(Label tail_label, Label head_label) noexcept {
  return tail_label <= head_label ? 1 : -1;
}

std::vector<EdgeRecord> edges(const Labeling& labeling) {
  std::vector<EdgeRecord> out;
  out.reserve(labeling.vertex_count());
  for (std::size_t p = 0; p < labeling.polygon_count(); ++p) {
    const auto poly = labeling.polygon(p);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Label t = poly[i];
      const Label h = poly[next_index(i, poly.size())];
      out.push_back({{p, i}, t, h, intrinsic_sign(t, h)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view condition_name(Condition condition) noexcept {
  switch (condition) {
    case Condition::kOccurrence: return "(i)";
    case Condition::kConnected: return "(ii)";
    case Condition::kRuns: return "(iii)";
    case Condition::kEdgePairs: return "(iv)";
    case Condition::kNeighbours: return "(v)";
    case Condition::kEvenLabelCount: return "m-even";
    case Condition::kVertexTotal: return "vertex-total";
    case Condition::kMinimumSize: return "size-bound";
    case Condition::kLabelRange: return "label-range";
  }
  return "?";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << condition_name(condition);
  if (polygon) out << " polygon " << *polygon + 1;
  if (position) out << " position " << *position + 1;
  if (!labels.empty()) {
    out << " labels {";
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
    out << "}";
  }
  if (count) out << " count " << *count;
  if (!polygons.empty()) {
    out << " polygons {";
    for (std::size_t i = 0; i < polygons.size(); ++i) out << (i ? "," : "") << polygons[i] + 1;
    out << "}";
  }
  return out.str();
}

std::vector<Violation> VerificationReport::violations_of(Condition condition) const {
  std::vector<Violation> out;
  std::copy_if(violations.begin(), violations.end(), std::back_inserter(out),
               [condition](const Violation& v) { return v.condition == condition; });
  return out;
}

std::optional<Condition> VerificationReport::first_failure() const noexcept {
  for (std::size_t c = 0; c < kConditionCount; ++c) {
    if (!verdicts[c]) return static_cast<Condition>(c);
  }
  return std::nullopt;
}

namespace {

// Components of the polygon graph where two polygons are joined when they share
// a label. Returns a component id per polygon.
std::vector<std::size_t> label_components(const Labeling& labeling) {
  const std::size_t n = labeling.polygon_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::optional<std::size_t>> owner(static_cast<std::size_t>(labeling.label_count()) + 1);
  for (std::size_t p = 0; p < n; ++p) {
    for (Label l : labeling.polygon(p)) {
      auto& o = owner[static_cast<std::size_t>(l)];
      if (!o) {
        o = p;
      } else {
        parent[find(p)] = find(*o);
      }
    }
  }
  std::vector<std::size_t> comp(n);
  for (std::size_t p = 0; p < n; ++p) comp[p] = find(p);
  return comp;
}

// Masks of the non-empty proper polygon subsets in which every label occurs
// zero or at least three times.
std::vector<std::uint32_t> closed_subsets(const Labeling& labeling, bool stop_at_first) {
  const std::size_t n = labeling.polygon_count();
  std::vector<std::uint32_t> closed;
  if (n <= 1) return closed;
  if (n > 24) throw PreconditionError("subset enumeration limited to 24 polygons");
  const auto m = static_cast<std::size_t>(labeling.label_count());
  std::vector<std::vector<std::size_t>> per_polygon(n, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t p = 0; p < n; ++p) {
    for (Label l : labeling.polygon(p)) ++per_polygon[p][static_cast<std::size_t>(l)];
  }
  std::vector<std::size_t> counts(m + 1);
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t p = 0; p < n; ++p) {
      if (mask & (1u << p)) {
        for (std::size_t l = 1; l <= m; ++l) counts[l] += per_polygon[p][l];
      }
    }
    const bool sees_partial = std::any_of(counts.begin() + 1, counts.end(),
                                          [](std::size_t c) { return c == 1 || c == 2; });
    if (!sees_partial) {
      closed.push_back(mask);
      if (stop_at_first) break;
    }
  }
  return closed;
}

void check_subsets(const Labeling& labeling, VerificationReport& report) {
  for (std::uint32_t mask : closed_subsets(labeling, false)) {
    Violation v{.condition = Condition::kConnected};
    for (std::size_t p = 0; p < labeling.polygon_count(); ++p) {
      if (mask & (1u << p)) v.polygons.push_back(p);
    }
    report.violations.push_back(std::move(v));
  }
}

void check_components(const Labeling& labeling, VerificationReport& report) {
  const auto comp = label_components(labeling);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t p = 0; p < comp.size(); ++p) groups[comp[p]].push_back(p);
  if (groups.size() <= 1) return;
  for (auto& [root, members] : groups) {
    report.violations.push_back({.condition = Condition::kConnected, .polygons = members});
  }
}

constexpr std::size_t kSubsetEnumerationLimit = 12;

}  // namespace

bool connected_by_subsets(const Labeling& labeling) { return closed_subsets(labeling, true).empty(); }

bool connected_by_components(const Labeling& labeling) {
  const auto comp = label_components(labeling);
  return std::all_of(comp.begin(), comp.end(), [&](std::size_t c) { return c == comp.front(); });
}

VerificationReport verify(const Labeling& labeling, SizeMode size_mode) {
  VerificationReport report;
  const auto m = static_cast<std::size_t>(labeling.label_count());
  const std::size_t n = labeling.polygon_count();
  auto& out = report.violations;

  const auto counts = labeling.occurrence_counts();
  for (std::size_t l = 1; l <= m; ++l) {
    if (counts[l] == 0) {
      out.push_back({.condition = Condition::kLabelRange, .labels = {static_cast<Label>(l)}, .count = 0});
    }
  }
  for (std::size_t l = 1; l <= m; ++l) {
    if (counts[l] != 3) {
      out.push_back({.condition = Condition::kOccurrence, .labels = {static_cast<Label>(l)}, .count = counts[l]});
    }
  }
  if (m % 2 != 0) {
    out.push_back({.condition = Condition::kEvenLabelCount, .count = m});
  }
  if (labeling.vertex_count() != 3 * m) {
    out.push_back({.condition = Condition::kVertexTotal, .count = labeling.vertex_count()});
  }
  if (size_mode == SizeMode::kStrict) {
    for (std::size_t p = 0; p < n; ++p) {
      if (labeling.polygon_size(p) < kMinPolygonSize) {
        out.push_back({.condition = Condition::kMinimumSize, .polygon = p, .count = labeling.polygon_size(p)});
      }
    }
  }

  if (n <= kSubsetEnumerationLimit) {
    check_subsets(labeling, report);
  } else {
    check_components(labeling, report);
  }

  for (std::size_t p = 0; p < n; ++p) {
    for (const Run& run : cyclic_runs(labeling.polygon(p))) {
      const bool whole_polygon = run.length == labeling.polygon_size(p) && run.length > 1;
      if ((run.length != 1 && run.length != 3) || whole_polygon) {
        out.push_back({.condition = Condition::kRuns,
                       .polygon = p,
                       .position = run.start,
                       .labels = {run.label},
                       .count = run.length});
      }
    }
  }

  struct EdgeTally {
    std::size_t count = 0;
    EdgeRef first;
    Label a = 0, b = 0;
  };
  std::map<std::uint64_t, EdgeTally> tallies;
  for (const auto& rec : edges(labeling)) {
    if (rec.tail_label == rec.head_label) continue;
    auto& t = tallies[pair_key(rec.tail_label, rec.head_label)];
    if (t.count++ == 0) {
      t.first = rec.edge;
      t.a = std::min(rec.tail_label, rec.head_label);
      t.b = std::max(rec.tail_label, rec.head_label);
    }
  }
  for (const auto& [key, t] : tallies) {
    if (t.count != 2) {
      out.push_back({.condition = Condition::kEdgePairs,
                     .polygon = t.first.polygon,
                     .position = t.first.position,
                     .labels = {t.a, t.b},
                     .count = t.count});
    }
  }

  for (std::size_t p = 0; p < n; ++p) {
    const auto poly = labeling.polygon(p);
    const std::size_t k = poly.size();
    if (k < 3) continue;
    for (std::size_t i = 0; i < k; ++i) {
      const Label before = poly[prev_index(i, k)];
      const Label after = poly[next_index(i, k)];
      if (before == after && before != poly[i]) {
        out.push_back({.condition = Condition::kNeighbours,
                       .polygon = p,
                       .position = i,
                       .labels = {poly[i], before}});
      }
    }
  }

  report.verdicts.fill(true);
  for (const auto& v : out) report.verdicts[static_cast<std::size_t>(v.condition)] = false;
  report.proper = std::all_of(report.verdicts.begin(), report.verdicts.end(), [](bool b) { return b; });
  if (report.proper) {
    const auto table = pairing_unchecked(labeling);
    report.oriented = std::all_of(table.pairs().begin(), table.pairs().end(), [&](const ProperPair& pr) {
      const int s1 = intrinsic_sign(labeling.tail(pr.first), labeling.head(pr.first));
      const int s2 = intrinsic_sign(labeling.tail(pr.second), labeling.head(pr.second));
      return s1 == -s2;
    });
  }
  return report;
}

// ---------------------------------------------------------------------------

PairingTable::PairingTable(std::vector<ProperPair> pairs, std::vector<std::size_t> offsets)
    : pairs_(std::move(pairs)), offsets_(std::move(offsets)) {
  const std::size_t total = offsets_.empty() ? 0 : offsets_.back();
  pair_index_.assign(total, pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    pair_index_.at(slot(pairs_[i].first)) = i;
    pair_index_.at(slot(pairs_[i].second)) = i;
  }
}

const ProperPair& PairingTable::pair_of(EdgeRef edge) const {
  const std::size_t idx = pair_index_.at(slot(edge));
  if (idx >= pairs_.size()) throw ConsistencyError("edge has no proper pair");
  return pairs_[idx];
}

EdgeRef PairingTable::partner(EdgeRef edge) const {
  const auto& pr = pair_of(edge);
  return pr.first == edge ? pr.second : pr.first;
}

PairingTable pairing_unchecked(const Labeling& labeling) {
  std::vector<std::size_t> offsets(labeling.polygon_count() + 1, 0);
  for (std::size_t p = 0; p < labeling.polygon_count(); ++p) {
    offsets[p + 1] = offsets[p] + labeling.polygon_size(p);
  }
  std::vector<ProperPair> pairs;
  std::map<std::uint64_t, EdgeRef> open;
  for (std::size_t p = 0; p < labeling.polygon_count(); ++p) {
    const auto poly = labeling.polygon(p);
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Label t = poly[i];
      const Label h = poly[next_index(i, k)];
      if (t == h) continue;
      const auto key = pair_key(t, h);
      if (auto it = open.find(key); it != open.end()) {
        pairs.push_back({it->second, {p, i}, PairKind::kDistinctLabels});
        open.erase(it);
      } else {
        open.emplace(key, EdgeRef{p, i});
      }
    }
    for (const Run& run : cyclic_runs(poly)) {
      if (run.length == 3) {
        EdgeRef a{p, run.start};
        EdgeRef b{p, next_index(run.start, k)};
        if (b < a) std::swap(a, b);
        pairs.push_back({a, b, PairKind::kFold});
      }
    }
  }
  if (!open.empty()) throw ConsistencyError("unmatched edge in pairing");
  std::sort(pairs.begin(), pairs.end(), [](const ProperPair& a, const ProperPair& b) { return a.first < b.first; });
  return PairingTable(std::move(pairs), std::move(offsets));
}

PairingTable pairing(const Labeling& labeling, SizeMode size_mode) {
  const auto report = verify(labeling, size_mode);
  if (!report.proper) {
    const auto failed = *report.first_failure();
    throw NotProperError("labeling is not proper: condition " + std::string(condition_name(failed)) +
                         " fails");
  }
  return pairing_unchecked(labeling);
}

bool oriented(const Labeling& labeling, SizeMode size_mode) {
  const auto report = verify(labeling, size_mode);
  if (!report.proper) {
    const auto failed = *report.first_failure();
    throw NotProperError("labeling is not proper: condition " + std::string(condition_name(failed)) +
                         " fails");
  }
  return report.oriented;
}

}  // namespace htl
