#include <gtest/gtest.h>

#include <random>

#include "kgonal/census.hpp"
#include "oracles.hpp"
#include "region_snapshots.hpp"

using namespace kgonal;

TEST(Survey, GenusTwoNonemptyPoints) {
  SurveyRange range;
  range.d_max = 2;
  std::set<RegionPoint> pts;
  for (const auto& rec : survey(CurveClass(2, 2), range))
    if (rec.nonempty_bar) pts.emplace(rec.b, rec.a);
  EXPECT_EQ(pts, (std::set<RegionPoint>{{1, 1}, {2, 1}, {1, 2}}));
  EXPECT_EQ(region_points(CurveClass(2, 2)), pts);
}

TEST(Survey, OrderedByRankThenDegree) {
  const auto recs = survey(CurveClass(12, 4));
  ASSERT_FALSE(recs.empty());
  for (std::size_t i = 1; i < recs.size(); ++i)
    ASSERT_LT(std::make_pair(recs[i - 1].r, recs[i - 1].d), std::make_pair(recs[i].r, recs[i].d));
  for (const auto& rec : recs) ASSERT_GT(12 - rec.d + rec.r, 0);
}

TEST(Survey, RecordInvariants) {
  for (integer g = 2; g <= 30; ++g)
    for (integer k = 2; k <= CurveClass::max_gonality(g); ++k) {
      const CurveClass cc(g, k);
      for (const auto& rec : survey(cc)) {
        ASSERT_LE(rec.rho, rec.rho_lower);
        ASSERT_LE(rec.rho_lower, rec.rho_bar);
        if (!rec.in_gap) ASSERT_EQ(rec.rho_lower, rec.rho_bar);
        ASSERT_EQ(rec.rho_bar, oracle::rho_bar(g, k, rec.d, rec.r).value);
        ASSERT_EQ(rec.emptiness_ambiguous, rec.rho_bar >= 0 && rec.rho_lower < 0);
        const auto dual_s = dual(g, {rec.d, rec.r});
        ASSERT_EQ(make_record(cc, dual_s).rho_bar, rec.rho_bar);
        if (rec.rho >= 0) {
          const bool expect = rec.r == 0 || g - rec.d + rec.r == 1 || g - k <= rec.d - 2 * rec.r;
          ASSERT_EQ(rec.generic_dim, expect) << g << ' ' << k << ' ' << rec.d << ' ' << rec.r;
          if (!rec.generic_dim) ASSERT_GT(rec.rho_lower, rec.rho);
        } else {
          ASSERT_FALSE(rec.generic_dim);
        }
      }
    }
}

TEST(Census, GenusThousandGonalityForty) {
  const auto s = summarize(CurveClass(1000, 40));
  EXPECT_EQ(s.pairs_nonneg, 13123);
  EXPECT_EQ(s.gap_pairs, 552);
  EXPECT_EQ(s.ambiguous_empty, 69);
  EXPECT_EQ(s.proportion().rounded(), "0.042");
}

TEST(Census, SummaryMatchesSurvey) {
  for (integer g = 2; g <= 40; g += 3)
    for (integer k = 2; k <= CurveClass::max_gonality(g); ++k) {
      const CurveClass cc(g, k);
      CensusSummary ref{g, k, 0, 0, 0};
      for (const auto& rec : survey(cc)) {
        if (!rec.nonempty_bar) continue;
        ++ref.pairs_nonneg;
        if (rec.rho_lower < rec.rho_bar) {
          ++ref.gap_pairs;
          if (rec.rho_lower < 0) ++ref.ambiguous_empty;
        }
      }
      ASSERT_EQ(summarize(cc), ref) << g << ' ' << k;
    }
}

TEST(Census, GenusTwentyHasNoGaps) {
  const auto report = census_summary(20);
  ASSERT_EQ(report.per_k.size(), 10u);
  for (const auto& s : report.per_k) {
    EXPECT_EQ(s.gap_pairs, 0) << s.k;
    EXPECT_GT(s.pairs_nonneg, 0);
  }
}

TEST(Census, ThreadCountDoesNotMatter) {
  const auto one = census_summary(90, {}, 1);
  const auto four = census_summary(90, {}, 4);
  EXPECT_EQ(one.per_k, four.per_k);
  EXPECT_EQ(one.argmax, four.argmax);
}

TEST(Census, ArgmaxKeepsSmallestK) {
  // At g=20 all proportions are 0; ties resolve to the first k.
  EXPECT_EQ(census_summary(20).best().k, 2);
}

TEST(Proportion, Rounding) {
  EXPECT_EQ((Proportion{552, 13123}).rounded(), "0.042");
  EXPECT_EQ((Proportion{1, 2000}).rounded(), "0.001");
  EXPECT_EQ((Proportion{1, 2001}).rounded(), "0.000");
  EXPECT_EQ((Proportion{0, 0}).rounded(), "0.000");
  EXPECT_EQ((Proportion{3, 3}).rounded(), "1.000");
  EXPECT_TRUE((Proportion{1, 3}) < (Proportion{1, 2}));
  EXPECT_FALSE((Proportion{2, 4}) < (Proportion{1, 2}));
}

TEST(Region, GenusTwentySnapshots) {
  for (integer k = 2; k <= 11; ++k) {
    const auto pts = region_points(CurveClass(20, k));
    EXPECT_EQ(pts.size(), snapshot::g20_sizes[static_cast<std::size_t>(k - 2)]) << k;
    EXPECT_EQ(pts, snapshot::g20_points(k)) << k;
  }
}

TEST(Region, ShrinksAsGonalityGrows) {
  for (integer g = 2; g <= 40; ++g)
    for (integer k = 2; k < CurveClass::max_gonality(g); ++k) {
      const auto small = region_points(CurveClass(g, k + 1));
      const auto big = region_points(CurveClass(g, k));
      ASSERT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end())) << g << ' ' << k;
    }
}

TEST(Region, MaximalGonalityIsBrillNoether) {
  for (integer g = 1; g <= 60; ++g) {
    const auto pts = region_points(CurveClass(g, CurveClass::max_gonality(g)));
    ASSERT_EQ(pts, brill_noether_region(g)) << g;
  }
  EXPECT_EQ(brill_noether_region(20).size(), 66u);
}

TEST(Region, MatchesWideEnumeration) {
  for (integer g = 1; g <= 25; ++g)
    for (integer k = 2; k <= CurveClass::max_gonality(g); ++k) {
      std::set<RegionPoint> ref;
      for (integer a = 1; a <= 2 * g + 3; ++a)
        for (integer b = 1; b <= 2 * g + 3; ++b)
          if (g - oracle::delta(a, b, k) >= 0) ref.emplace(b, a);
      ASSERT_EQ(region_points(CurveClass(g, k)), ref);
    }
}

TEST(Cm, ExampleSelection) {
  const auto cands = cm_components(CurveClass(20, 6), {12, 2});
  ASSERT_EQ(cands.size(), 3u);  // {0,1,2}
  const auto sel = std::find_if(cands.begin(), cands.end(), [](const auto& c) { return c.selected; });
  ASSERT_NE(sel, cands.end());
  EXPECT_EQ(sel->ell, 2);
  EXPECT_EQ(sel->dim, 0);
  EXPECT_TRUE(sel->hypotheses_ok);
  EXPECT_TRUE(sel->rank_bound && sel->divides && sel->dim_bound);
  EXPECT_EQ(cands[0].ell, 0);
  EXPECT_EQ(cands[0].dim, -10);
  EXPECT_FALSE(cands[0].dim_bound);
  EXPECT_EQ(std::count_if(cands.begin(), cands.end(), [](const auto& c) { return c.selected; }), 1);
}

TEST(Cm, Rejections) {
  EXPECT_THROW((void)cm_components(CurveClass(20, 6), {12, 0}), precondition_error);
  EXPECT_THROW((void)cm_components(CurveClass(20, 6), {20, 2}), precondition_error);
}

TEST(Cm, SelectedMatchesLowerBound) {
  for (integer g = 3; g <= 40; ++g)
    for (integer k = 2; k <= CurveClass::max_gonality(g); ++k) {
      const CurveClass cc(g, k);
      for (integer d = 1; d <= g - 1; ++d)
        for (integer r = 1; 2 * r <= d; ++r) {
          const auto low = rho_lower(cc, {d, r});
          if (low.value < 0) continue;
          for (const auto& c : cm_components(cc, {d, r}))
            if (c.selected && c.hypotheses_ok) ASSERT_EQ(c.dim, low.value) << g << ' ' << k << ' ' << d << ' ' << r;
        }
    }
}

TEST(Sharpness, Examples) {
  const auto r20 = verify_sharpness(20);
  EXPECT_TRUE(r20.passed());
  EXPECT_EQ(r20.cases.size(), 10u);
  for (const auto& c : r20.cases) EXPECT_TRUE(c.hypothesis);

  const auto r200 = verify_sharpness(200);
  EXPECT_TRUE(r200.passed());
  for (const auto& c : r200.cases) EXPECT_EQ(c.hypothesis, c.k <= 5 || c.k >= 42) << c.k;

  // Outside the hypothesis the sweep only reports.
  const auto r25 = verify_sharpness(25);
  EXPECT_FALSE(r25.cases[4].hypothesis);
  EXPECT_TRUE(r25.cases[4].counterexamples.empty());
}

TEST(Sharpness, FindsNonnegativeGapPointsWhenHypothesisFails) {
  // Some genus must exhibit gap points with rho_bar >= 0, otherwise the
  // census value 552 would be impossible.
  const auto r = verify_sharpness(100);
  integer nonneg = 0;
  for (const auto& c : r.cases) nonneg += c.nonneg_gap_points;
  EXPECT_GT(nonneg, 0);
}
