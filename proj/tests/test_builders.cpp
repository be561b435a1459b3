#include <gtest/gtest.h>

#include "corpus.hpp"
#include "htl/builders.hpp"
#include "htl/surface.hpp"

using namespace htl;

TEST(BaseLabelings, MatchReferenceData) {
  EXPECT_EQ(base_labeling(Case::k1), corpus::base7());
  EXPECT_EQ(base_labeling(Case::k2), corpus::base10());
  EXPECT_EQ(base_labeling(Case::k3), corpus::base9());
  EXPECT_EQ(base_labeling(Case::k4), corpus::base8());
  EXPECT_EQ(base_labeling(Case::k5), corpus::base18());
  EXPECT_EQ(base_labeling(Case::k6), corpus::base12());
  EXPECT_EQ(base18_uncorrected(), corpus::base18_uncorrected());
  for (int c = 1; c <= 6; ++c) EXPECT_TRUE(verify(base_labeling(static_cast<Case>(c))).proper) << c;
}

TEST(Plan, Cases) {
  EXPECT_EQ(case_of(7), Case::k1);
  EXPECT_EQ(case_of(11), Case::k1);
  EXPECT_EQ(case_of(14), Case::k2);
  EXPECT_EQ(case_of(15), Case::k3);
  EXPECT_EQ(case_of(20), Case::k4);
  EXPECT_EQ(case_of(30), Case::k5);
  EXPECT_EQ(case_of(24), Case::k6);
  EXPECT_TRUE(plan_for(22).oriented_directly);
  EXPECT_FALSE(plan_for(12).oriented_directly);
}

TEST(Build, Examples) {
  const auto l7 = build(7);
  EXPECT_EQ(l7, corpus::base7());
  EXPECT_EQ(glue(l7).chi, -1);

  const auto l13 = build(13);
  EXPECT_EQ(l13.polygon_count(), 6u);
  EXPECT_EQ(l13.regular_size(), 13u);
  EXPECT_EQ(glue(l13).chi, -7);

  const auto l22 = build(22);
  EXPECT_EQ(l22.polygon_count(), 3u);
  EXPECT_EQ(glue(l22).chi, -8);
  EXPECT_TRUE(oriented(l22));
}

TEST(Build, RefusesSmallK) {
  EXPECT_THROW(build(6), PreconditionError);
  EXPECT_THROW(build_oriented(5), PreconditionError);
}

TEST(BuildOriented, Examples) {
  const auto o10 = build_oriented(10);
  EXPECT_EQ(o10.polygon_count(), 3u);
  EXPECT_EQ(classify(glue(o10)).genus, 2);

  const auto o7 = build_oriented(7);
  EXPECT_EQ(o7.polygon_count(), 12u);
  EXPECT_EQ(glue(o7).chi, -2);
  EXPECT_EQ(classify(glue(o7)).genus, 2);

  const auto o12 = build_oriented(12);
  EXPECT_EQ(o12.polygon_count(), 2u);
  EXPECT_EQ(glue(o12).chi, -2);

  const auto o9 = build_oriented(9);
  EXPECT_EQ(o9.polygon_count(), 4u);
  EXPECT_EQ(glue(o9).chi, -2);
}

TEST(BuildFoldFree, NoEqualNeighbours) {
  for (int k : {8, 15, 16, 20, 21, 27, 33}) {
    const auto l = build_fold_free(k);
    EXPECT_FALSE(l.has_equal_neighbours()) << k;
    EXPECT_EQ(static_cast<std::int64_t>(l.polygon_count()), n_min(k));
  }
  EXPECT_THROW(build_fold_free(9), NotRepresentableError);
}

TEST(BuildSweep, EveryKUpTo100) {
  for (std::int64_t k = 7; k <= 100; ++k) {
    const auto l = build(k);
    const auto n = n_min(k);
    ASSERT_EQ(static_cast<std::int64_t>(l.polygon_count()), n) << k;
    ASSERT_EQ(l.regular_size(), static_cast<std::size_t>(k)) << k;
    ASSERT_TRUE(verify(l).proper) << k;
    const auto s = glue(l);
    EXPECT_EQ(Rational(s.chi), predicted_chi(k, n)) << k;
    EXPECT_TRUE(s.label_class_match) << k;
    EXPECT_TRUE(eek_admissible(l.label_count(), k)) << k;
    if (k % 12 == 2 || k % 12 == 6 || k % 12 == 10) EXPECT_TRUE(oriented(l)) << k;

    const auto o = build_oriented(k);
    const auto so = glue(o);
    EXPECT_TRUE(oriented(o)) << k;
    EXPECT_TRUE(so.orientable) << k;
    const std::int64_t factor = plan_for(k).oriented_directly ? 1 : 2;
    EXPECT_EQ(Rational(so.chi), predicted_chi(k, factor * n)) << k;
    EXPECT_EQ(area_from_chi(so.chi), minimal_area(k).oriented) << k;
  }
}
