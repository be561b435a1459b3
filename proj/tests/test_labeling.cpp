#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "corpus.hpp"
#include "gen.hpp"
#include "htl/labeling.hpp"

using namespace htl;

namespace {

bool has(const VerificationReport& r, Condition c) { return !r.passed(c); }

}  // namespace

TEST(Labeling, RejectsLabelsOutsideRange) {
  EXPECT_THROW(Labeling({{1, 2, 0}}, 2), StructuralError);
  EXPECT_THROW(Labeling({{1, 2, 3}}, 2), StructuralError);
  EXPECT_THROW(Labeling({{}}, 2), StructuralError);
}

TEST(Labeling, LabelCountDefaultsToLargestLabel) {
  const Labeling l({{1, 5, 2}});
  EXPECT_EQ(l.label_count(), 5);
  EXPECT_EQ(l.vertex_count(), 3u);
}

TEST(Verify, BaseFamiliesAreProper) {
  for (const auto& [name, l] : corpus::proper_bases()) {
    const auto r = verify(l);
    EXPECT_TRUE(r.proper) << name << ": " << (r.violations.empty() ? "" : r.violations[0].describe());
    EXPECT_TRUE(r.violations.empty()) << name;
  }
}

TEST(Verify, Uncorrected18gonFailsOccurrence) {
  const auto r = verify(corpus::base18_uncorrected());
  EXPECT_FALSE(r.proper);
  EXPECT_FALSE(r.passed(Condition::kOccurrence));
  const auto v = r.violations_of(Condition::kOccurrence);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].labels, std::vector<Label>{1});
  EXPECT_EQ(v[0].count, 2u);
  EXPECT_EQ(v[1].labels, std::vector<Label>{7});
  EXPECT_EQ(v[1].count, 1u);
  // The stray label also leaves four label pairs with a single edge.
  std::set<std::vector<Label>> lonely;
  for (const auto& x : r.violations_of(Condition::kEdgePairs)) lonely.insert(x.labels);
  EXPECT_EQ(lonely, (std::set<std::vector<Label>>{{1, 2}, {1, 5}, {2, 7}, {5, 7}}));
}

TEST(Verify, DisjointUnionFailsConnectivity) {
  const Labeling l({{1, 2, 3, 4, 1, 3, 2, 4, 3, 1, 2, 4}, {5, 6, 7, 8, 5, 7, 6, 8, 7, 5, 6, 8}});
  const auto r = verify(l);
  EXPECT_FALSE(r.proper);
  EXPECT_TRUE(has(r, Condition::kConnected));
  EXPECT_TRUE(r.passed(Condition::kOccurrence));
  EXPECT_TRUE(r.passed(Condition::kEdgePairs));
  EXPECT_FALSE(connected_by_subsets(l));
  EXPECT_FALSE(connected_by_components(l));
}

TEST(Verify, RunOfTwoAndRunOfFour) {
  // 1 1 in a 7-gon: run of length two.
  const auto r2 = verify(Labeling({{1, 1, 2, 3, 4, 5, 6}}, 6), SizeMode::kRelaxed);
  EXPECT_TRUE(has(r2, Condition::kRuns));
  const auto r4 = verify(Labeling({{1, 1, 1, 1, 2, 3, 4}}, 4), SizeMode::kRelaxed);
  EXPECT_TRUE(has(r4, Condition::kRuns));
}

TEST(Verify, RunWrappingAroundCounts) {
  // The run 1 . . . 1 1 wraps to length three.
  const Labeling l({{1, 2, 3, 3, 3, 2, 1, 1}}, 3);
  const auto r = verify(l, SizeMode::kRelaxed);
  EXPECT_TRUE(r.passed(Condition::kRuns));
}

TEST(Verify, NeighbourCondition) {
  const auto r = verify(Labeling({{1, 2, 1, 3, 4, 5, 6}}, 6), SizeMode::kRelaxed);
  EXPECT_TRUE(has(r, Condition::kNeighbours));
  ASSERT_FALSE(r.violations_of(Condition::kNeighbours).empty());
  EXPECT_EQ(r.violations_of(Condition::kNeighbours)[0].position, 1u);
}

TEST(Verify, SizeBoundOnlyInStrictMode) {
  const Labeling l({{1, 1, 1, 2, 2, 2}}, 2);
  const auto strict = verify(l);
  EXPECT_TRUE(has(strict, Condition::kMinimumSize));
  EXPECT_FALSE(strict.proper);
  const auto relaxed = verify(l, SizeMode::kRelaxed);
  EXPECT_TRUE(relaxed.passed(Condition::kRuns));
  EXPECT_TRUE(relaxed.proper);
}

TEST(Verify, OddLabelCountAndTotal) {
  const auto r = verify(Labeling({{1, 2, 3, 1, 2, 3, 1, 2, 3}}, 3));
  EXPECT_TRUE(has(r, Condition::kEvenLabelCount));
  const auto missing = verify(Labeling({{1, 2, 3, 1, 2, 3, 1, 2, 3}}, 4), SizeMode::kRelaxed);
  EXPECT_TRUE(has(missing, Condition::kLabelRange));
  EXPECT_TRUE(has(missing, Condition::kVertexTotal));
}

TEST(Verify, ProperIsConjunctionOfVerdicts) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto l = gen::random_triples({7, 7, 10}, rng);
    const auto r = verify(l);
    const bool all = std::all_of(r.verdicts.begin(), r.verdicts.end(), [](bool b) { return b; });
    EXPECT_EQ(r.proper, all);
    EXPECT_EQ(r.proper, r.violations.empty());
  }
}

TEST(Edges, IntrinsicSigns) {
  EXPECT_EQ(intrinsic_sign(2, 5), 1);
  EXPECT_EQ(intrinsic_sign(5, 2), -1);
  EXPECT_EQ(intrinsic_sign(3, 3), 1);
  const auto recs = edges(corpus::base7());
  EXPECT_EQ(recs.size(), 42u);
  for (const auto& e : recs) {
    EXPECT_EQ(e.intrinsic_sign, e.tail_label <= e.head_label ? 1 : -1);
  }
}

TEST(Pairing, NonagonsWrapEdgeAndFold) {
  const Labeling l = corpus::base9();
  const auto table = pairing(l);
  EXPECT_EQ(table.size(), 9u);
  // Pi_1 wraps 5 -> 4 at position 8; the only other {4,5} edge is Pi_2 position 0.
  EXPECT_EQ(table.partner({0, 8}), (EdgeRef{1, 0}));
  // Run 3,3,3 of Pi_2 occupies positions 4..6.
  const auto& fold = table.pair_of({1, 4});
  EXPECT_EQ(fold.kind, PairKind::kFold);
  EXPECT_EQ(table.partner({1, 4}), (EdgeRef{1, 5}));
}

TEST(Pairing, TwelveGonHasNoFolds) {
  const auto table = pairing(corpus::base12());
  EXPECT_EQ(table.size(), 6u);
  for (const auto& p : table.pairs()) EXPECT_EQ(p.kind, PairKind::kDistinctLabels);
}

TEST(Pairing, RefusesNonProper) {
  try {
    pairing(corpus::base18_uncorrected());
    FAIL() << "expected NotProperError";
  } catch (const NotProperError& e) {
    EXPECT_NE(std::string(e.what()).find("(i)"), std::string::npos);
  }
}

TEST(Pairing, PerfectMatchingWithEqualLabelSets) {
  for (const auto& [name, l] : corpus::proper_bases()) {
    const auto table = pairing(l);
    std::map<EdgeRef, int> seen;
    for (const auto& p : table.pairs()) {
      ++seen[p.first];
      ++seen[p.second];
      auto labels = [&](EdgeRef e) { return std::pair<Label, Label>(std::minmax(l.tail(e), l.head(e))); };
      EXPECT_EQ(labels(p.first), labels(p.second)) << name;
    }
    EXPECT_EQ(seen.size(), l.vertex_count()) << name;
    for (const auto& [e, c] : seen) EXPECT_EQ(c, 1) << name;
  }
}

TEST(Pairing, DistinctLabelPartnersNeverShareAVertex) {
  for (const auto& [name, l] : corpus::proper_bases()) {
    for (const auto& p : pairing(l).pairs()) {
      if (p.kind != PairKind::kDistinctLabels || p.first.polygon != p.second.polygon) continue;
      const std::size_t k = l.polygon_size(p.first.polygon);
      const std::size_t d = (p.second.position + k - p.first.position) % k;
      EXPECT_NE(d, 1u) << name;
      EXPECT_NE(d, k - 1) << name;
    }
  }
}

TEST(Oriented, BaseFamilies) {
  EXPECT_TRUE(oriented(corpus::base10()));
  EXPECT_TRUE(oriented(corpus::base18()));
  EXPECT_FALSE(oriented(corpus::base7()));
  EXPECT_FALSE(oriented(corpus::base9()));
  EXPECT_FALSE(oriented(corpus::base8()));
  EXPECT_FALSE(oriented(corpus::base12()));
}

TEST(Oriented, ImpliesNoEqualNeighbours) {
  for (const auto& [name, l] : corpus::proper_bases()) {
    if (oriented(l)) EXPECT_FALSE(l.has_equal_neighbours()) << name;
  }
}

TEST(Connectivity, SubsetAndComponentMethodsAgree) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const auto l = gen::random_triples({4, 5, 3, 6}, rng);
    EXPECT_EQ(connected_by_subsets(l), connected_by_components(l));
  }
  for (const auto& [name, l] : corpus::proper_bases()) {
    EXPECT_TRUE(connected_by_subsets(l)) << name;
    EXPECT_TRUE(connected_by_components(l)) << name;
  }
}

TEST(Canonical, RotationAndRenaming) {
  const auto base = canonicalize(corpus::base12());
  Polygon rotated = corpus::base12().polygons()[0];
  std::rotate(rotated.begin(), rotated.begin() + 3, rotated.end());
  EXPECT_EQ(canonicalize(Labeling({rotated})), base);
  Polygon swapped = corpus::base12().polygons()[0];
  for (auto& v : swapped) v = v == 1 ? 2 : v == 2 ? 1 : v;
  EXPECT_EQ(canonicalize(Labeling({swapped})), base);
  EXPECT_NE(canonicalize(corpus::base9()), canonicalize(corpus::base8()));
}

TEST(Canonical, IdempotentAndInvariantUnderScrambling) {
  gen::Rng rng(2024);
  for (const auto& [name, l] : corpus::proper_bases()) {
    const auto c = canonicalize(l);
    EXPECT_EQ(canonicalize(c), c) << name;
    for (int trial = 0; trial < 20; ++trial) EXPECT_EQ(canonicalize(gen::scramble(l, rng)), c) << name;
  }
}

TEST(Canonical, WithoutReflectionSeesChirality) {
  // Oriented labelings keep orientation under reflection-free symmetries only.
  gen::Rng rng(5);
  const auto l = corpus::base10();
  const auto c = canonicalize(l, false);
  for (int trial = 0; trial < 10; ++trial) EXPECT_EQ(canonicalize(gen::scramble(l, rng, false), false), c);
}

namespace {

// Brute force over every polygon order, rotation choice and reflection.
Labeling brute_canonical(const Labeling& l) {
  std::optional<std::vector<Polygon>> best;
  for (int reflect = 0; reflect < 2; ++reflect) {
    auto polys = l.polygons();
    if (reflect) {
      for (auto& p : polys) std::reverse(p.begin(), p.end());
    }
    std::vector<std::size_t> order(polys.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<std::size_t> rot(polys.size(), 0);
      while (true) {
        std::vector<Label> rename(static_cast<std::size_t>(l.label_count()) + 1, 0);
        Label fresh = 1;
        std::vector<Polygon> out;
        for (std::size_t j : order) {
          const auto& p = polys[j];
          Polygon q;
          for (std::size_t i = 0; i < p.size(); ++i) {
            auto& t = rename[static_cast<std::size_t>(p[(i + rot[j]) % p.size()])];
            if (!t) t = fresh++;
            q.push_back(t);
          }
          out.push_back(q);
        }
        if (!best || out < *best) best = out;
        std::size_t d = 0;
        while (d < rot.size() && ++rot[d] == polys[d].size()) rot[d++] = 0;
        if (d == rot.size()) break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return Labeling(*best, l.label_count());
}

}  // namespace

TEST(Canonical, MatchesBruteForceOracle) {
  gen::Rng rng(99);
  for (const auto& l : {corpus::base10(), corpus::base9(), corpus::base8(), corpus::base12()}) {
    EXPECT_EQ(canonicalize(l), brute_canonical(l));
  }
  for (int trial = 0; trial < 60; ++trial) {
    const auto l = gen::random_triples({4, 4, 4}, rng);
    EXPECT_EQ(canonicalize(l), brute_canonical(l));
  }
}
