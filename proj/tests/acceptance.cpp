// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: htl_acceptance [criterion...]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "gen.hpp"
#include "htl/builders.hpp"
#include "htl/geom.hpp"
#include "htl/rewrite.hpp"
#include "htl/search.hpp"
#include "htl/surface.hpp"

using namespace htl;

namespace {

// Collects failed checks; a criterion passes when none failed.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string str(std::int64_t v) { return std::to_string(v); }

PiMultiple pi(std::int64_t p) { return {Rational(p)}; }

bool contains(const std::vector<Labeling>& v, const Labeling& l) { return std::find(v.begin(), v.end(), l) != v.end(); }

// ---------------------------------------------------------------------------

void base_families(Check& c) {
  const std::vector<std::pair<std::string, Labeling>> bases = {
      {"base7", corpus::base7()}, {"base10", corpus::base10()}, {"base9", corpus::base9()},
      {"base8", corpus::base8()}, {"base12", corpus::base12()}};
  for (const auto& [name, l] : bases) c.expect(verify(l).proper, name + " proper");
  c.expect(oriented(corpus::base10()), "base10 oriented");

  const auto bad = verify(corpus::base18_uncorrected());
  c.expect(!bad.proper, "base18 uncorrected rejected");
  std::set<std::pair<Label, std::size_t>> counts;
  for (const auto& v : bad.violations) {
    if (v.condition == Condition::kOccurrence && v.labels.size() == 1 && v.count) {
      counts.insert({v.labels.front(), *v.count});
    }
  }
  c.expect(counts == std::set<std::pair<Label, std::size_t>>{{1, 2}, {7, 1}}, "base18 uncorrected count violations");
  c.expect(verify(corpus::base18()).proper, "base18 repaired proper");
  c.expect(oriented(corpus::base18()), "base18 repaired oriented");
}

void topology_table(Check& c) {
  struct Row {
    std::int64_t k, n, v, e, f, chi;
    Labeling l;
  };
  const std::vector<Row> rows = {{7, 6, 14, 21, 6, -1, corpus::base7()},  {10, 3, 10, 15, 3, -2, corpus::base10()},
                                 {9, 2, 6, 9, 2, -1, corpus::base9()},    {8, 3, 8, 12, 3, -1, corpus::base8()},
                                 {18, 1, 6, 9, 1, -2, corpus::base18()}, {12, 1, 4, 6, 1, -1, corpus::base12()}};
  for (const auto& r : rows) {
    const auto s = glue(r.l);
    const auto t = classify(s);
    const std::string k = "k=" + str(r.k);
    c.expect(static_cast<std::int64_t>(r.l.polygon_count()) == r.n, k + " n");
    c.expect(r.l.regular_size() == static_cast<std::size_t>(r.k), k + " size");
    c.expect(static_cast<std::int64_t>(s.vertices) == r.v && static_cast<std::int64_t>(s.edges) == r.e &&
                 static_cast<std::int64_t>(s.faces) == r.f && s.chi == r.chi,
             k + " V,E,F,chi = " + str(s.vertices) + "," + str(s.edges) + "," + str(s.faces) + "," + str(s.chi));
    const bool want_orientable = r.k == 10 || r.k == 18;
    c.expect(s.orientable == want_orientable, k + " orientability");
    if (want_orientable) {
      c.expect(t.genus == 2, k + " genus");
    } else {
      c.expect(t.crosscaps == 3, k + " crosscaps");
    }
  }
}

void areas(Check& c) {
  for (int k : {7, 8, 9, 12}) c.expect(minimal_area(k).general == pi(2), "general area k=" + str(k));
  for (int k : {10, 18}) c.expect(minimal_area(k).general == pi(4), "general area k=" + str(k));
  for (int k : {7, 8, 9, 10, 12, 18}) c.expect(minimal_area(k).oriented == pi(4), "oriented area k=" + str(k));
  for (int k = 7; k <= 100; ++k) {
    if (k % 12 == 2 || k % 12 == 6 || k % 12 == 10) {
      c.expect(minimal_area(k).oriented == minimal_area(k).general, "oriented = general k=" + str(k));
    }
  }
  for (int k = 7; k <= 100; ++k) {
    const Rational base = Rational(n_min(k) * (k - 6), 3);
    c.expect(area_from_chi(glue(build(k)).chi) == PiMultiple{base}, "build area k=" + str(k));
    const auto o = build_oriented(k);
    const Rational factor = plan_for(k).oriented_directly ? 1 : 2;
    c.expect(area_from_chi(glue(o).chi) == PiMultiple{base * factor}, "build_oriented area k=" + str(k));
  }
}

void builder_sweep(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t k = 7; k <= 100; ++k) {
    const std::string tag = "k=" + str(k);
    const auto n = n_min(k);
    try {
      const auto l = build(k);
      c.expect(static_cast<std::int64_t>(l.polygon_count()) == n, tag + " n");
      c.expect(l.regular_size() == static_cast<std::size_t>(k), tag + " equal k-gons");
      c.expect(verify(l).proper, tag + " proper");
      c.expect(Rational(glue(l).chi) == Rational(n) * (1 - Rational(k, 6)), tag + " chi");

      const auto o = build_oriented(k);
      const auto s = glue(o);
      c.expect(oriented(o), tag + " oriented");
      c.expect(s.orientable, tag + " orientable");
      const std::int64_t factor = plan_for(k).oriented_directly ? 1 : 2;
      c.expect(Rational(s.chi) == Rational(factor * n) * (1 - Rational(k, 6)), tag + " oriented chi");
    } catch (const Error& e) {
      c.expect(false, tag + ": " + e.what());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60, "sweep took " + std::to_string(secs) + "s");
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << secs << "s";
  c.note = note.str();
}

void rewrite_preservation(Check& c) {
  gen::Rng rng(20240611);
  std::vector<Labeling> bases;
  for (const auto& e : corpus::proper_bases()) bases.push_back(e.labeling);
  std::size_t applied = 0, b_on_oriented = 0;
  while (applied < 500) {
    Labeling l = gen::scramble(gen::pick(bases, rng), rng);
    for (int step = 0; step < 5 && applied < 500; ++step) {
      const int op = std::uniform_int_distribution<int>(0, 2)(rng);
      const auto m = l.label_count();
      const auto t = l.vertex_count();
      const bool was_oriented = oriented(l, SizeMode::kRelaxed);
      Labeling r;
      if (op < 2) {
        const auto sites = triangle_sites(l);
        if (sites.empty()) break;
        const auto& s = gen::pick(sites, rng);
        r = op == 0 ? apply_a(l, s) : apply_b(l, s);
        const Label dm = op == 0 ? 2 : 4;
        c.expect(r.label_count() == m + dm && r.vertex_count() == t + 3 * static_cast<std::size_t>(dm),
                 "size increments of (" + std::string(op == 0 ? "a" : "b") + ")");
        if (op == 1 && was_oriented) {
          ++b_on_oriented;
          c.expect(oriented(r, SizeMode::kRelaxed), "(b) kept orientedness");
        }
      } else {
        const auto sites = pair_sites(l);
        if (sites.empty()) break;
        const auto& s = gen::pick(sites, rng);
        const auto side = std::bernoulli_distribution(0.5)(rng) ? LongSide::kE : LongSide::kF;
        r = apply_c(l, s, side);
        c.expect(r.label_count() == m + 2 && r.vertex_count() == t + 6, "size increments of (c)");
        const auto long_poly = side == LongSide::kE ? s.e.polygon : s.f.polygon;
        const auto short_poly = side == LongSide::kE ? s.f.polygon : s.e.polygon;
        if (long_poly != short_poly) {
          c.expect(r.polygon(long_poly).size() == l.polygon(long_poly).size() + 5 &&
                       r.polygon(short_poly).size() == l.polygon(short_poly).size() + 1,
                   "(c) split 5/1");
        }
      }
      c.expect(verify(r, SizeMode::kRelaxed).proper, "re-verify after rewrite");
      l = std::move(r);
      ++applied;
    }
  }
  c.expect(b_on_oriented > 0, "no (b) on an oriented input was drawn");
  c.note = str(applied) + " applications, " + str(b_on_oriented) + " (b) on oriented inputs";
}

void oracle_equivalence(Check& c) {
  struct Case {
    std::size_t k, n;
  };
  std::uint64_t nodes = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [k, n] : std::vector<Case>{{12, 1}, {18, 1}, {9, 2}, {8, 3}}) {
    const std::string tag = "(" + str(k) + "," + str(n) + ")";
    const auto r = search_labelings(k, n);
    nodes += r.nodes;
    c.expect(r.status == SearchStatus::kComplete, tag + " search complete");
    c.expect(!r.labelings.empty(), tag + " exists");
    c.expect(contains(r.labelings, canonicalize(build(static_cast<std::int64_t>(k)))), tag + " builder in oracle set");
  }
  for (std::size_t k = 7; k <= 24; ++k) {
    for (std::size_t n = 1; n * k <= 24; ++n) {
      if (n * k % 6 == 0) continue;
      const auto r = search_labelings(k, n);
      c.expect(r.status == SearchStatus::kComplete && r.labelings.empty(),
               "non-existence (" + str(k) + "," + str(n) + ")");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 600, "searches took " + std::to_string(secs) + "s");
  c.note = str(nodes) + " nodes";
}

void double_cover_check(Check& c) {
  const std::vector<std::pair<std::string, Labeling>> corpus_surfaces = {
      {"base7", corpus::base7()}, {"base10", corpus::base10()}, {"base9", corpus::base9()},
      {"base8", corpus::base8()}, {"base18", corpus::base18()}, {"base12", corpus::base12()}};
  for (const auto& [name, l] : corpus_surfaces) {
    const auto s = glue(l);
    if (s.orientable) continue;
    try {
      const auto d = double_cover(l);
      const auto ds = glue(d);
      c.expect(d.polygon_count() == 2 * l.polygon_count(), name + " n doubled");
      c.expect(d.label_count() == 2 * l.label_count(), name + " m doubled");
      c.expect(ds.chi == 2 * s.chi, name + " chi doubled");
      c.expect(ds.orientable, name + " cover orientable");
      c.expect(verify(d).proper, name + " cover proper");
      if (name == "base7") {
        c.expect(classify(ds).genus == 2 && d.polygon_count() == 12 && d.regular_size() == 7u, "k=7 cover genus 2");
      }
    } catch (const NotRepresentableError& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
}

void hamiltonian(Check& c) {
  const auto k4 = complete_graph_k4();
  bool base12_found = false;
  for (const auto& w : double_walks(k4)) {
    base12_found = base12_found || canonicalize(walk_to_labeling(k4, w)) == canonicalize(corpus::base12());
  }
  c.expect(base12_found, "K4 walk gives base12");
  c.expect(!double_hamiltonian(k4, true), "K4 has no both-directions walk");

  // Prism and K3,3: at least one must admit a both-directions walk.
  const std::vector<std::pair<std::string, CubicGraph>> six = {
      {"prism", make_cubic_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})},
      {"K3,3", make_cubic_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})}};
  std::string found;
  for (const auto& [name, g] : six) {
    const auto d = double_hamiltonian(g, true);
    if (!d) continue;
    const auto l = walk_to_labeling(g, *d);
    if (verify(l).proper && oriented(l)) found += (found.empty() ? "" : ", ") + name;
  }
  c.expect(!found.empty(), "no 6-vertex cubic graph with an oriented walk");
  c.note = "oriented walk on " + found;

  for (const auto& l : {corpus::base12(), corpus::base18(), build(24), build(30), build(36)}) {
    const auto [g, walk] = labeling_to_walk(l);
    c.expect(walk_to_labeling(g, walk) == l, "labeling -> walk -> labeling");
    const auto back = labeling_to_walk(walk_to_labeling(g, walk));
    c.expect(back.first.edges == g.edges && back.second == walk, "walk -> labeling -> walk");
  }
  gen::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto l = gen::scramble(corpus::base18(), rng);
    const auto [g, walk] = labeling_to_walk(l);
    c.expect(canonicalize(walk_to_labeling(g, walk)) == canonicalize(corpus::base18()), "scrambled round trip");
  }
}

void numeric(Check& c) {
  std::vector<Labeling> all;
  for (const auto& e : corpus::proper_bases()) all.push_back(e.labeling);
  for (int k = 7; k <= 40; ++k) all.push_back(build(k));
  for (const auto& l : all) {
    const auto k = static_cast<std::int64_t>(*l.regular_size());
    // m (pi - 6 pi / k) against 2 pi |chi|
    const Rational lhs = Rational(l.label_count()) * (1 - Rational(6, k));
    const Rational rhs = Rational(2 * std::abs(glue(l).chi));
    c.expect(lhs == rhs, "area identity k=" + str(k));
  }
  for (int k = 7; k <= 30; ++k) {
    const double alpha = 2 * std::numbers::pi / k;
    const auto t = triangle_geometry(alpha);
    const double cosh_side = std::cos(alpha) / (1 - std::cos(alpha));
    const double cosh_R = std::sqrt((2 * cosh_side + 1) / 3);
    const double cosh_r = cosh_R / std::cosh(std::acosh(cosh_side) / 2);
    c.expect(std::abs(t.inradius - std::acosh(cosh_r)) < 1e-12, "inradius k=" + str(k));
    c.expect(std::abs(t.circumradius - std::acosh(cosh_R)) < 1e-12, "circumradius k=" + str(k));
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"base families", base_families},
      {"topology table", topology_table},
      {"minimal areas", areas},
      {"builder sweep", builder_sweep},
      {"rewrite preservation", rewrite_preservation},
      {"oracle equivalence", oracle_equivalence},
      {"double cover", double_cover_check},
      {"double hamiltonian walks", hamiltonian},
      {"numeric cross-checks", numeric},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("criterion %d %s: %s", id, criteria[i].first.c_str(), ok ? "PASS" : "FAIL");
    if (!c.note.empty()) std::printf(" (%s)", c.note.c_str());
    std::printf("\n");
    for (std::size_t j = 0; j < c.failures.size() && j < 8; ++j) std::printf("    %s\n", c.failures[j].c_str());
    if (c.failures.size() > 8) std::printf("    ... %zu more\n", c.failures.size() - 8);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
