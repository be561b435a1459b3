#include "htl/rewrite.hpp"

#include <algorithm>
#include <tuple>

namespace htl {

namespace {

struct Occurrence {
  std::size_t polygon;
  std::size_t position;
  Label before;
  Label after;
};

std::vector<Occurrence> occurrences_of(const Labeling& labeling, Label w) {
  std::vector<Occurrence> out;
  for (std::size_t p = 0; p < labeling.polygon_count(); ++p) {
    const auto poly = labeling.polygon(p);
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (poly[i] == w) out.push_back({p, i, poly[(i + k - 1) % k], poly[(i + 1) % k]});
    }
  }
  return out;
}

void require_proper(const Labeling& result, const char* operation) {
  const auto report = verify(result, SizeMode::kRelaxed);
  if (!report.proper) {
    throw ConsistencyError(std::string(operation) + " produced a labeling failing condition " +
                           std::string(condition_name(*report.first_failure())));
  }
}

Labeling rewrite_site(const Labeling& labeling, const TriangleSite& site, const Replacement& rule,
                      const char* operation) {
  if (triangle_site_at(labeling, site.w) != site) {
    throw StaleSiteError(std::string(operation) + ": site at " + std::to_string(site.w) +
                         " does not match the labeling");
  }
  const Label m = labeling.label_count();
  auto symbol = [&](int s) { return s == 0 ? site.w : static_cast<Label>(m + s); };

  std::vector<Polygon> polys = labeling.polygons();
  // Expand from the highest centre down so earlier positions stay valid.
  std::array<std::size_t, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = site.paths[a];
    const auto& pb = site.paths[b];
    return std::tie(pa.polygon, pa.center) > std::tie(pb.polygon, pb.center);
  });
  for (std::size_t j : order) {
    const auto& path = site.paths[j];
    Polygon middle;
    for (int s : rule.middles[j]) middle.push_back(symbol(s));
    if (path.reversed) std::reverse(middle.begin(), middle.end());
    auto& poly = polys[path.polygon];
    poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(path.center));
    poly.insert(poly.begin() + static_cast<std::ptrdiff_t>(path.center), middle.begin(), middle.end());
  }

  Labeling result(std::move(polys), m + rule.new_labels);
  require_proper(result, operation);
  return result;
}

}  // namespace

const Replacement& replacement_a() {
  // x a w b y,  y b a w z,  z w b a x
  static const Replacement rule{{{{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}}, 2};
  return rule;
}

const Replacement& replacement_b() {
  // x a c w d b y,  y b c a d w z,  z w c b d a x
  // The naive middle of the second path, b c d a w, leaves the edges
  // {a,c}, {c,d}, {d,w}, {w,a} unpaired; swapping d and a restores pairing
  // and keeps oriented labelings oriented.
  static const Replacement rule{{{{1, 3, 0, 4, 2}, {2, 3, 1, 4, 0}, {0, 3, 2, 4, 1}}}, 4};
  return rule;
}

std::optional<TriangleSite> triangle_site_at(const Labeling& labeling, Label w) {
  const auto occ = occurrences_of(labeling, w);
  if (occ.size() != 3) return std::nullopt;
  std::vector<Label> around;
  for (const auto& o : occ) {
    if (o.before == o.after || o.before == w || o.after == w) return std::nullopt;
    around.push_back(o.before);
    around.push_back(o.after);
  }
  std::sort(around.begin(), around.end());
  // Each of x, y, z appears in exactly two of the three neighbour pairs.
  if (!(around[0] == around[1] && around[2] == around[3] && around[4] == around[5] &&
        around[1] != around[2] && around[3] != around[4])) {
    return std::nullopt;
  }
  TriangleSite site;
  site.w = w;
  site.x = around[0];
  site.y = around[2];
  site.z = around[4];
  const std::array<std::pair<Label, Label>, 3> ends{{{site.x, site.y}, {site.y, site.z}, {site.z, site.x}}};
  std::array<bool, 3> filled{};
  for (const auto& o : occ) {
    bool matched = false;
    for (std::size_t j = 0; j < 3; ++j) {
      const auto [s, t] = ends[j];
      if (filled[j]) continue;
      if (o.before == s && o.after == t) {
        site.paths[j] = {o.polygon, o.position, false};
      } else if (o.before == t && o.after == s) {
        site.paths[j] = {o.polygon, o.position, true};
      } else {
        continue;
      }
      filled[j] = matched = true;
      break;
    }
    if (!matched) return std::nullopt;
  }
  return site;
}

std::vector<TriangleSite> triangle_sites(const Labeling& labeling) {
  const auto report = verify(labeling, SizeMode::kRelaxed);
  if (!report.proper) {
    throw NotProperError("triangle_sites: labeling fails condition " +
                         std::string(condition_name(*report.first_failure())));
  }
  std::vector<TriangleSite> out;
  for (Label w = 1; w <= labeling.label_count(); ++w) {
    if (auto site = triangle_site_at(labeling, w)) out.push_back(*site);
  }
  return out;
}

Labeling apply_a(const Labeling& labeling, const TriangleSite& site) {
  return rewrite_site(labeling, site, replacement_a(), "apply_a");
}

Labeling apply_b(const Labeling& labeling, const TriangleSite& site) {
  return rewrite_site(labeling, site, replacement_b(), "apply_b");
}

std::vector<PairSite> pair_sites(const Labeling& labeling) {
  const auto table = pairing(labeling, SizeMode::kRelaxed);
  std::vector<PairSite> out;
  for (const auto& pr : table.pairs()) {
    if (pr.kind != PairKind::kDistinctLabels) continue;
    const Label t = labeling.tail(pr.first);
    const Label h = labeling.head(pr.first);
    out.push_back({pr.first, pr.second, std::min(t, h), std::max(t, h)});
  }
  std::sort(out.begin(), out.end(),
            [](const PairSite& a, const PairSite& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  return out;
}

Labeling apply_c(const Labeling& labeling, const PairSite& site, LongSide long_side) {
  const auto table = pairing(labeling, SizeMode::kRelaxed);
  auto labels_of = [&](EdgeRef e) {
    const Label t = labeling.tail(e);
    const Label h = labeling.head(e);
    return std::pair{std::min(t, h), std::max(t, h)};
  };
  const bool valid = site.e.polygon < labeling.polygon_count() && site.f.polygon < labeling.polygon_count() &&
                     site.e.position < labeling.polygon_size(site.e.polygon) &&
                     site.f.position < labeling.polygon_size(site.f.polygon) && site.x != site.y &&
                     table.partner(site.e) == site.f && labels_of(site.e) == std::pair{site.x, site.y} &&
                     labels_of(site.f) == std::pair{site.x, site.y};
  if (!valid) throw StaleSiteError("apply_c: pair site does not match the labeling");

  const Label alpha = labeling.label_count() + 1;
  const Label beta = labeling.label_count() + 2;
  const EdgeRef long_edge = long_side == LongSide::kE ? site.e : site.f;
  const EdgeRef short_edge = long_side == LongSide::kE ? site.f : site.e;

  struct Insertion {
    EdgeRef edge;
    Polygon middle;
  };
  std::array<Insertion, 2> inserts{{{long_edge, {alpha, beta, beta, beta, alpha}}, {short_edge, {alpha}}}};
  std::sort(inserts.begin(), inserts.end(), [](const Insertion& a, const Insertion& b) { return b.edge < a.edge; });

  std::vector<Polygon> polys = labeling.polygons();
  for (const auto& ins : inserts) {
    auto& poly = polys[ins.edge.polygon];
    poly.insert(poly.begin() + static_cast<std::ptrdiff_t>(ins.edge.position + 1), ins.middle.begin(),
                ins.middle.end());
  }
  Labeling result(std::move(polys), beta);
  require_proper(result, "apply_c");
  return result;
}

}  // namespace htl
