#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "kgonal/estimates.hpp"
#include "kgonal/tableau.hpp"
#include "oracles.hpp"

using namespace kgonal;

namespace {

// Builds a tableau from rows listed top row first.
Tableau from_rows(integer k, std::vector<std::vector<integer>> top_first) {
  const auto a = static_cast<integer>(top_first.size());
  const auto b = static_cast<integer>(top_first.front().size());
  Tableau t(a, b, k);
  for (integer i = 0; i < a; ++i)
    for (integer x = 1; x <= b; ++x) t.at(x, a - i) = top_first[static_cast<std::size_t>(i)][static_cast<std::size_t>(x - 1)];
  return t;
}

std::set<integer> label_set(const Tableau& t) { return {t.labels().begin(), t.labels().end()}; }

// Direct check of both conditions over all pairs of boxes.
bool satisfies_definition(const Tableau& t) {
  for (integer y = 1; y <= t.a(); ++y)
    for (integer x = 1; x <= t.b(); ++x) {
      if (t.at(x, y) <= 0) return false;
      if (x < t.b() && t.at(x + 1, y) <= t.at(x, y)) return false;
      if (y < t.a() && t.at(x, y + 1) <= t.at(x, y)) return false;
      for (integer y2 = 1; y2 <= t.a(); ++y2)
        for (integer x2 = 1; x2 <= t.b(); ++x2)
          if (t.at(x, y) == t.at(x2, y2) && ((x - y) - (x2 - y2)) % t.k() != 0) return false;
    }
  return true;
}

// Every valid tableau with labels in {1..max_label}.
void for_each_tableau(integer a, integer b, integer k, integer max_label, const std::function<void(const Tableau&)>& f) {
  Tableau t(a, b, k);
  std::function<void(integer)> rec = [&](integer cell) {
    if (cell == a * b) {
      if (satisfies_definition(t)) f(t);
      return;
    }
    const integer x = cell % b + 1, y = cell / b + 1;
    integer lo = 1;
    if (x > 1) lo = std::max(lo, t.at(x - 1, y) + 1);
    if (y > 1) lo = std::max(lo, t.at(x, y - 1) + 1);
    for (integer v = lo; v <= max_label; ++v) {
      t.at(x, y) = v;
      rec(cell + 1);
    }
    t.at(x, y) = 0;
  };
  rec(0);
}

}  // namespace

TEST(Validate, ThreeUniformExample) {
  const auto t = from_rows(3, {{5, 6, 7}, {3, 4, 5}, {1, 2, 3}});
  const auto v = validate(t);
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.distinct_labels, 7);
  EXPECT_FALSE(v.violation.has_value());
}

TEST(Validate, SingleBox) {
  for (integer k = 2; k <= 6; ++k) {
    const auto v = validate(Tableau(1, 1, k, {1}));
    EXPECT_TRUE(v.valid);
    EXPECT_EQ(v.distinct_labels, 1);
  }
}

TEST(Validate, CongruenceViolation) {
  const auto t = from_rows(4, {{5, 6, 7}, {3, 4, 5}, {1, 2, 3}});
  const auto v = validate(t);
  ASSERT_FALSE(v.valid);
  EXPECT_EQ(v.violation->kind, ViolationKind::congruence);
  // The two 3s: (3,1) and (1,2), lattice distance 3.
  EXPECT_EQ(v.violation->first, (Box{3, 1}));
  EXPECT_EQ(v.violation->second, (Box{1, 2}));
}

TEST(Validate, MonotonicityViolations) {
  auto row = validate(Tableau(1, 3, 5, {1, 3, 3}));
  ASSERT_FALSE(row.valid);
  EXPECT_EQ(row.violation->kind, ViolationKind::row_not_increasing);
  EXPECT_EQ(row.violation->first, (Box{2, 1}));
  EXPECT_EQ(row.violation->second, (Box{3, 1}));

  auto col = validate(Tableau(2, 1, 5, {4, 2}));
  ASSERT_FALSE(col.valid);
  EXPECT_EQ(col.violation->kind, ViolationKind::column_not_increasing);
  EXPECT_EQ(col.violation->second, (Box{1, 2}));

  auto zero = validate(Tableau(2, 2, 3));
  ASSERT_FALSE(zero.valid);
  EXPECT_EQ(zero.violation->kind, ViolationKind::nonpositive_label);
  EXPECT_NE(zero.violation->message().find("(1,1)"), std::string::npos);
}

TEST(Validate, AgreesWithDefinitionOnSmallGrids) {
  // All fillings of 2x2 with labels 1..4, valid or not.
  for (integer k = 2; k <= 4; ++k)
    for (integer v0 = 1; v0 <= 4; ++v0)
      for (integer v1 = 1; v1 <= 4; ++v1)
        for (integer v2 = 1; v2 <= 4; ++v2)
          for (integer v3 = 1; v3 <= 4; ++v3) {
            const Tableau t(2, 2, k, {v0, v1, v2, v3});
            ASSERT_EQ(validate(t).valid, satisfies_definition(t));
          }
}

TEST(ConstructMinimal, SevenBySevenSixUniform) {
  // Reference labels for a = b = 7, k = 6: 3x1 strips filled in sequence.
  const auto expected = from_rows(6, {{19, 22, 25, 28, 31, 34, 37},
                                      {12, 15, 18, 21, 24, 27, 30},
                                      {11, 14, 17, 20, 23, 26, 29},
                                      {10, 13, 16, 19, 22, 25, 28},
                                      {3, 6, 9, 12, 15, 18, 21},
                                      {2, 5, 8, 11, 14, 17, 20},
                                      {1, 4, 7, 10, 13, 16, 19}});
  const auto t = construct_minimal(7, 7, 6);
  EXPECT_EQ(t, expected);
  const auto v = validate(t);
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.distinct_labels, 33);
  EXPECT_EQ(t.max_label(), 37);
  std::set<integer> missing;
  const auto present = label_set(t);
  for (integer i = 1; i <= 37; ++i)
    if (!present.count(i)) missing.insert(i);
  EXPECT_EQ(missing, (std::set<integer>{32, 33, 35, 36}));
}

TEST(ConstructMinimal, AllDistinctCase) {
  const auto t = construct_minimal(2, 2, 4);
  EXPECT_EQ(validate(t).distinct_labels, 4);
}

TEST(ConstructMinimal, ThreeByThree) {
  const auto t = construct_minimal(3, 3, 3);
  const auto v = validate(t);
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.distinct_labels, 7);
}

TEST(ConstructMinimal, SingleRowIsConsecutive) {
  const auto t = construct_minimal(1, 6, 2);
  EXPECT_EQ(std::vector<integer>(t.labels().begin(), t.labels().end()), (std::vector<integer>{1, 2, 3, 4, 5, 6}));
  const auto tt = construct_minimal(6, 1, 2);
  EXPECT_EQ(tt.a(), 6);
  EXPECT_EQ(tt.b(), 1);
  EXPECT_TRUE(validate(tt).valid);
}

TEST(ConstructMinimal, TightOnSmallShapesBothOrientations) {
  for (integer a = 1; a <= 12; ++a)
    for (integer b = 1; b <= 12; ++b)
      for (integer k = 2; k <= a + b + 3; ++k) {
        const auto t = construct_minimal(a, b, k);
        ASSERT_EQ(t.a(), a);
        ASSERT_EQ(t.b(), b);
        ASSERT_TRUE(satisfies_definition(t)) << a << ' ' << b << ' ' << k;
        ASSERT_EQ(static_cast<integer>(label_set(t).size()), oracle::delta(a, b, k)) << a << ' ' << b << ' ' << k;
      }
}

TEST(CompressLabels, SevenBySeven) {
  const auto c = compress_labels(construct_minimal(7, 7, 6));
  std::set<integer> want;
  for (integer i = 1; i <= 33; ++i) want.insert(i);
  EXPECT_EQ(label_set(c), want);
  EXPECT_TRUE(validate(c).valid);
  EXPECT_EQ(validate(c).distinct_labels, 33);
}

TEST(CompressLabels, IdentityAndPairs) {
  const auto consecutive = construct_minimal(1, 5, 3);
  EXPECT_EQ(compress_labels(consecutive), consecutive);
  const auto c = compress_labels(Tableau(1, 2, 3, {2, 9}));
  EXPECT_EQ(c, Tableau(1, 2, 3, {1, 2}));
}

TEST(CompressLabels, IdempotentOnConstructions) {
  for (integer a = 1; a <= 8; ++a)
    for (integer b = 1; b <= 8; ++b)
      for (integer k = 2; k <= 12; ++k) {
        const auto t = construct_minimal(a, b, k);
        const auto c = compress_labels(t);
        ASSERT_EQ(compress_labels(c), c);
        ASSERT_EQ(validate(c).distinct_labels, validate(t).distinct_labels);
      }
}

TEST(CompressLabels, RejectsInvalid) {
  EXPECT_THROW((void)compress_labels(Tableau(1, 2, 3, {2, 2})), precondition_error);
}

TEST(BlockingSet, BandPlusTopRowShape) {
  const auto s = blocking_set(3, 8, 4);
  EXPECT_EQ(s.case_tag, BlockingCase::band_plus_top_row);
  EXPECT_EQ(s.boxes.size(), 14u);
  // Cells per row: y=1 -> x 1..4, y=2 -> 2..5, y=3 -> 3..8.
  std::vector<Box> want;
  for (integer x = 1; x <= 4; ++x) want.push_back({x, 1});
  for (integer x = 2; x <= 5; ++x) want.push_back({x, 2});
  for (integer x = 3; x <= 8; ++x) want.push_back({x, 3});
  std::sort(want.begin(), want.end());
  EXPECT_EQ(s.boxes, want);
  EXPECT_TRUE(has_domination_property(s));
}

TEST(BlockingSet, DiagonalBandShape) {
  const auto s = blocking_set(5, 6, 4);
  EXPECT_EQ(s.case_tag, BlockingCase::diagonal_band);
  EXPECT_EQ(s.boxes.size(), 18u);
  const std::vector<std::pair<integer, integer>> spans{{1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}};
  std::vector<Box> want;
  for (integer y = 1; y <= 5; ++y)
    for (integer x = spans[static_cast<std::size_t>(y - 1)].first; x <= spans[static_cast<std::size_t>(y - 1)].second; ++x)
      want.push_back({x, y});
  std::sort(want.begin(), want.end());
  EXPECT_EQ(s.boxes, want);
  EXPECT_TRUE(has_domination_property(s));
}

TEST(BlockingSet, AllBoxes) {
  const auto s = blocking_set(2, 2, 4);
  EXPECT_EQ(s.case_tag, BlockingCase::all_boxes);
  EXPECT_EQ(s.boxes.size(), 4u);
}

TEST(BlockingSet, RequiresSortedSides) { EXPECT_THROW((void)blocking_set(4, 3, 3), precondition_error); }

TEST(BlockingSet, DominationCheckerMatchesPairwise) {
  for (integer a = 1; a <= 9; ++a)
    for (integer b = a; b <= 11; ++b)
      for (integer k = 2; k <= a + b + 2; ++k) {
        const auto s = blocking_set(a, b, k);
        ASSERT_EQ(static_cast<integer>(s.boxes.size()), oracle::delta(a, b, k));
        bool pairwise = true;
        for (Box p : s.boxes)
          for (Box q : s.boxes)
            if (((p.x - p.y) - (q.x - q.y)) % k == 0 && !dominates(p, q) && !dominates(q, p)) pairwise = false;
        ASSERT_TRUE(pairwise) << a << ' ' << b << ' ' << k;
        ASSERT_EQ(has_domination_property(s), pairwise);
      }
  // A set with an incomparable congruent pair must be rejected.
  BlockingSet bad{2, 3, 2, {{1, 2}, {2, 1}}, BlockingCase::all_boxes};
  std::sort(bad.boxes.begin(), bad.boxes.end());
  EXPECT_FALSE(has_domination_property(bad));
}

TEST(BlockingSet, CertificateHoldsForEveryTableau) {
  // Exhaustive over all valid tableaux with labels <= a*b on small shapes.
  for (integer a = 1; a <= 3; ++a)
    for (integer b = a; a * b <= 8; ++b)
      for (integer k = 2; k <= a + b; ++k) {
        const auto s = blocking_set(a, b, k);
        integer seen = 0;
        for_each_tableau(a, b, k, a * b, [&](const Tableau& t) {
          ++seen;
          std::set<integer> labels;
          for (Box p : s.boxes) labels.insert(t.at(p));
          ASSERT_EQ(labels.size(), s.boxes.size()) << a << ' ' << b << ' ' << k;
        });
        ASSERT_GT(seen, 0);
      }
}
