#include "htl/builders.hpp"

#include <algorithm>
#include <numeric>

#include "htl/rewrite.hpp"
#include "htl/search.hpp"
#include "htl/surface.hpp"

namespace htl {

std::int64_t n_min(std::int64_t k) {
  if (k < 7) throw PreconditionError("n_min: k must be at least 7");
  return 6 / std::gcd(k, std::int64_t{6});
}

Rational predicted_chi(std::int64_t k, std::int64_t n) { return Rational(n) * (Rational(1) - Rational(k, 6)); }

bool eek_admissible(std::int64_t t, std::int64_t k) { return t % 2 == 0 && (3 * t) % k == 0; }

Case case_of(std::int64_t k) {
  if (k < 7) throw PreconditionError("case_of: k must be at least 7");
  switch (k % 12) {
    case 2:
    case 10:
      return Case::k2;
    case 3:
    case 9:
      return Case::k3;
    case 4:
    case 8:
      return Case::k4;
    case 6:
      return Case::k5;
    case 0:
      return Case::k6;
    default:
      return Case::k1;
  }
}

CasePlan plan_for(std::int64_t k) {
  CasePlan p;
  p.id = case_of(k);
  p.residue = k % 12;
  p.n = n_min(k);
  switch (p.id) {
    case Case::k1:
      p.base_k = 7, p.operation = Operation::kAlternateBA, p.increment = 6;
      break;
    case Case::k2:
      p.base_k = 10, p.operation = Operation::kB, p.increment = 4;
      break;
    case Case::k3:
      p.base_k = 9, p.operation = Operation::kC, p.increment = 6;
      break;
    case Case::k4:
      p.base_k = 8, p.operation = Operation::kB, p.increment = 4;
      break;
    case Case::k5:
      p.base_k = 18, p.operation = Operation::kB, p.increment = 12;
      break;
    case Case::k6:
      p.base_k = 12, p.operation = Operation::kB, p.increment = 12;
      break;
  }
  p.oriented_directly = oriented_minimum_matches(k);
  return p;
}

namespace {

Labeling family(std::vector<Polygon> polys) { return Labeling(std::move(polys)); }

// Fold-free stand-ins for the bases of cases 3 and 4, found by exhaustive search.
// No fold-free pair of 9-gons exists, so case 3 starts at 15 and k = 9 uses an
// oriented family of four 9-gons directly.
Labeling fold_free_octagons() {
  return family({{1, 2, 3, 1, 2, 4, 5, 6}, {1, 3, 7, 6, 5, 8, 7, 6}, {2, 3, 7, 8, 4, 5, 8, 4}});
}
constexpr Label kOctagonCentre = 3;

Labeling fold_free_15gons() {
  return family({{1, 2, 3, 1, 2, 4, 1, 3, 5, 6, 7, 8, 9, 10, 4}, {2, 3, 5, 7, 6, 9, 8, 10, 9, 6, 5, 7, 8, 10, 4}});
}

Labeling oriented_9gons() {
  return family({{1, 2, 3, 1, 4, 5, 6, 7, 4},
                 {1, 3, 7, 6, 8, 9, 10, 11, 2},
                 {2, 11, 9, 8, 12, 5, 4, 7, 3},
                 {5, 12, 10, 9, 11, 10, 12, 8, 6}});
}

void require_proper(const Labeling& l, const char* stage) {
  if (!verify(l).proper) throw ConsistencyError(std::string("builder produced a non-proper labeling at ") + stage);
}

// Polygons touched by the three paths of a site, sorted.
std::array<std::size_t, 3> footprint(const TriangleSite& site) {
  std::array<std::size_t, 3> out{site.paths[0].polygon, site.paths[1].polygon, site.paths[2].polygon};
  std::sort(out.begin(), out.end());
  return out;
}

// The site at `preferred` when its footprint matches, else the first site with
// that footprint.
std::optional<TriangleSite> pick_site(const Labeling& l, Label preferred, const std::array<std::size_t, 3>& wanted) {
  if (auto s = triangle_site_at(l, preferred); s && footprint(*s) == wanted) return s;
  for (const auto& s : triangle_sites(l)) {
    if (footprint(s) == wanted) return s;
  }
  return std::nullopt;
}

// Last resort: a searched labeling of the requested size.
Labeling searched_or_throw(std::int64_t k, std::int64_t n, const std::string& why) {
  SearchOptions opts;
  opts.limit = 1;
  const auto r = search_labelings(static_cast<std::size_t>(k), static_cast<std::size_t>(n), opts);
  if (!r.labelings.empty()) return r.labelings.front();
  throw ConstructionIncomplete("build(" + std::to_string(k) + "): " + why + "; exhaustive search " +
                               std::string(status_name(r.status)) + " without a labeling");
}

struct Grower {
  Labeling current;
  std::int64_t size;

  // One (a) or (b) at a site covering `wanted`; returns the new centre.
  std::optional<Label> rewrite(Label centre, const std::array<std::size_t, 3>& wanted, Operation op) {
    const auto site = pick_site(current, centre, wanted);
    if (!site) return std::nullopt;
    const Label m = current.label_count();
    current = op == Operation::kA ? apply_a(current, *site) : apply_b(current, *site);
    require_proper(current, op == Operation::kA ? "operation (a)" : "operation (b)");
    // (a) leaves a site at w; (b) leaves one at the new beta = m + 2.
    return op == Operation::kA ? site->w : m + 2;
  }
};

Labeling build_case1(std::int64_t k) {
  Grower g{base_labeling(Case::k1), 7};
  std::array<Label, 2> centres{1, 10};
  const std::array<std::array<std::size_t, 3>, 2> families{{{0, 1, 2}, {3, 4, 5}}};
  Operation next = Operation::kB;
  while (g.size < k) {
    for (std::size_t f = 0; f < 2; ++f) {
      auto c = g.rewrite(centres[f], families[f], next);
      if (!c) return searched_or_throw(k, 6, "no rewrite site");
      centres[f] = *c;
    }
    g.size += next == Operation::kB ? 4 : 2;
    next = next == Operation::kB ? Operation::kA : Operation::kB;
  }
  return g.current;
}

// Repeated (b) at the newest beta with paths in three distinct polygons, or in
// the single polygon.
Labeling build_b_chain(std::int64_t k, Labeling base, std::int64_t base_k, Label centre) {
  const std::int64_t n = static_cast<std::int64_t>(base.polygon_count());
  const std::array<std::size_t, 3> wanted = n == 1 ? std::array<std::size_t, 3>{0, 0, 0} : std::array<std::size_t, 3>{0, 1, 2};
  const std::int64_t step = n == 1 ? 12 : 4;
  Grower g{std::move(base), base_k};
  while (g.size < k) {
    auto c = g.rewrite(centre, wanted, Operation::kB);
    if (!c) return searched_or_throw(k, n, "no rewrite site");
    centre = *c;
    g.size += step;
  }
  return g.current;
}

// Index of `e`'s polygon size ordering: the long side goes to the smaller polygon.
LongSide long_side_for(const Labeling& l, const PairSite& site) {
  const auto se = l.polygon_size(site.e.polygon);
  const auto sf = l.polygon_size(site.f.polygon);
  if (se != sf) return se < sf ? LongSide::kE : LongSide::kF;
  return site.e.polygon <= site.f.polygon ? LongSide::kE : LongSide::kF;
}

Labeling build_case3(std::int64_t k) {
  Labeling current = base_labeling(Case::k3);
  std::int64_t size = 9;
  Label x = 4;
  Label y = 5;
  auto find_pair = [&](Label a, Label b) -> std::optional<PairSite> {
    const auto sites = pair_sites(current);
    for (const auto& s : sites) {
      if (s.x == std::min(a, b) && s.y == std::max(a, b) && s.e.polygon != s.f.polygon) return s;
    }
    for (const auto& s : sites) {
      if (s.e.polygon != s.f.polygon) return s;
    }
    return std::nullopt;
  };
  while (size < k) {
    for (int half = 0; half < 2; ++half) {
      const auto site = find_pair(x, y);
      if (!site) return searched_or_throw(k, 2, "no pair site across both polygons");
      const Label alpha = current.label_count() + 1;
      current = apply_c(current, *site, long_side_for(current, *site));
      require_proper(current, "operation (c)");
      // The new {x, alpha} pair again spans both polygons.
      x = site->x;
      y = alpha;
    }
    size += 6;
  }
  return current;
}

// Case 3 without folds: rounds of two (a) rewrites split 2/1 and 1/2 between
// the two polygons.
Labeling build_case3_fold_free(std::int64_t k) {
  Grower g{fold_free_15gons(), 15};
  Label first = 2;
  Label second = 5;
  while (g.size < k) {
    auto c1 = g.rewrite(first, {0, 0, 1}, Operation::kA);
    auto c2 = c1 ? g.rewrite(second, {0, 1, 1}, Operation::kA) : std::nullopt;
    if (!c1 || !c2) throw ConstructionIncomplete("build_fold_free(" + std::to_string(k) + "): no split site");
    first = *c1;
    second = *c2;
    g.size += 6;
  }
  return g.current;
}

void check_result(const Labeling& l, std::int64_t k, std::int64_t n) {
  if (static_cast<std::int64_t>(l.polygon_count()) != n || l.regular_size() != static_cast<std::size_t>(k)) {
    throw ConsistencyError("builder output has the wrong shape for k = " + std::to_string(k));
  }
  require_proper(l, "the final step");
}

}  // namespace

Labeling base18_uncorrected() { return family({{1, 2, 3, 4, 5, 1, 6, 5, 4, 2, 7, 5, 6, 3, 2, 4, 3, 6}}); }

Labeling base_labeling(Case id) {
  switch (id) {
    case Case::k1:
      return family({{1, 6, 9, 4, 2, 8, 7},
                     {1, 7, 13, 5, 2, 4, 3},
                     {1, 3, 14, 8, 2, 5, 6},
                     {7, 8, 14, 12, 11, 10, 13},
                     {3, 4, 9, 11, 10, 12, 14},
                     {9, 6, 5, 13, 10, 12, 11}});
    case Case::k2:
      return family({{10, 9, 3, 2, 1, 6, 5, 8, 1, 2}, {10, 2, 3, 4, 5, 6, 7, 8, 5, 4}, {10, 4, 3, 9, 7, 6, 1, 8, 7, 9}});
    case Case::k3:
      return family({{4, 6, 5, 1, 4, 6, 2, 1, 5}, {4, 5, 6, 2, 3, 3, 3, 2, 1}});
    case Case::k4:
      return family({{8, 2, 1, 1, 1, 2, 3, 6}, {8, 4, 5, 5, 5, 4, 3, 2}, {8, 6, 7, 7, 7, 6, 3, 4}});
    case Case::k5:
      // Position 11 reads 7 in print; 1 makes every label occur three times.
      return family({{1, 2, 3, 4, 5, 1, 6, 5, 4, 2, 1, 5, 6, 3, 2, 4, 3, 6}});
    case Case::k6:
      return family({{1, 2, 3, 4, 1, 3, 2, 4, 3, 1, 2, 4}});
  }
  throw PreconditionError("base_labeling: unknown case");
}

Labeling build(std::int64_t k) {
  const CasePlan plan = plan_for(k);
  Labeling out;
  switch (plan.id) {
    case Case::k1:
      out = build_case1(k);
      break;
    case Case::k2:
      out = build_b_chain(k, base_labeling(Case::k2), 10, 10);
      break;
    case Case::k3:
      out = build_case3(k);
      break;
    case Case::k4:
      out = build_b_chain(k, base_labeling(Case::k4), 8, 8);
      break;
    case Case::k5:
      out = build_b_chain(k, base_labeling(Case::k5), 18, 1);
      break;
    case Case::k6:
      out = build_b_chain(k, base_labeling(Case::k6), 12, 1);
      break;
  }
  check_result(out, k, plan.n);
  const auto surface = glue(out);
  if (Rational(surface.chi) != predicted_chi(k, plan.n)) {
    throw ConsistencyError("build(" + std::to_string(k) + "): Euler characteristic disagrees with n(1 - k/6)");
  }
  return out;
}

Labeling build_fold_free(std::int64_t k) {
  const CasePlan plan = plan_for(k);
  Labeling out;
  if (plan.id == Case::k4) {
    out = build_b_chain(k, fold_free_octagons(), 8, kOctagonCentre);
  } else if (plan.id == Case::k3) {
    if (k == 9) throw NotRepresentableError("build_fold_free(9): no fold-free pair of 9-gons exists");
    out = build_case3_fold_free(k);
  } else {
    return build(k);
  }
  check_result(out, k, plan.n);
  return out;
}

Labeling build_oriented(std::int64_t k) {
  const CasePlan plan = plan_for(k);
  Labeling out;
  std::int64_t n = plan.n;
  if (plan.oriented_directly) {
    out = build(k);
  } else if (k == 9) {
    out = oriented_9gons();
    n *= 2;
  } else {
    out = double_cover(build_fold_free(k));
    n *= 2;
  }
  check_result(out, k, n);
  if (!oriented(out)) throw ConsistencyError("build_oriented(" + std::to_string(k) + "): result is not oriented");
  return out;
}

}  // namespace htl
