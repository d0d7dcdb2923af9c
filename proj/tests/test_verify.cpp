#include <gtest/gtest.h>

#include <set>

#include "lsys/lsys.hpp"
#include "test_support.hpp"

using namespace lsys;

TEST(CheckCounts, HilbertA) {
  const VerificationReport r1 = check_counts(hilbert_a(), 1);
  EXPECT_TRUE(r1.passed);
  EXPECT_EQ(r1.detail, "4 nodes, 3 edges");
  const VerificationReport r3 = check_counts(hilbert_a(), 3);
  EXPECT_TRUE(r3.passed);
  EXPECT_EQ(r3.detail, "64 nodes, 63 edges");
}

TEST(CheckCounts, BothSystemsUpToTen) {
  for (unsigned m = 1; m <= 10; ++m) {
    EXPECT_TRUE(check_counts(hilbert_a(), m).passed) << m;
    EXPECT_TRUE(check_counts(hilbert_b(), m).passed) << m;
  }
}

TEST(CheckCounts, CapRaisesResourceLimit) {
  EXPECT_THROW(check_counts(hilbert_a(), 13), ResourceLimit);
  EXPECT_THROW(check_counts(hilbert_a(), 5, 4), ResourceLimit);
}

TEST(CheckGridCoverage, FirstGenerationPoints) {
  const Path p = decode_path(hilbert_a(), 1);
  std::set<std::pair<std::int64_t, std::int64_t>> pts;
  for (Point q : p) pts.insert({q.x, q.y});
  EXPECT_EQ(pts, (std::set<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(check_grid_coverage(hilbert_a(), 1).passed);
}

TEST(CheckGridCoverage, BothSystemsUpToTen) {
  for (unsigned m = 1; m <= 10; ++m) {
    const Path pa = decode_path(hilbert_a(), m);
    const Path pb = decode_path(hilbert_b(), m);
    const VerificationReport ca = check_path_grid_coverage(pa, m);
    const VerificationReport cb = check_path_grid_coverage(pb, m);
    EXPECT_TRUE(ca.passed) << ca.detail;
    EXPECT_TRUE(cb.passed) << cb.detail;
    // Coverage implies self-avoidance.
    if (ca.passed) {
      EXPECT_TRUE(check_self_avoiding(pa).passed);
    }
    if (cb.passed) {
      EXPECT_TRUE(check_self_avoiding(pb).passed);
    }
  }
}

TEST(CheckGridCoverage, CorruptedPathNamesCounterexample) {
  MoveSeq mv = decode_moves(hilbert_a(), 2);
  // Flip the fourth move (up) to down: the path returns to the origin.
  ASSERT_EQ(mv[3], Move::up);
  mv[3] = Move::down;
  const VerificationReport r = check_path_grid_coverage(to_path(mv), 2);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("(0,0) visited twice, again at index 4"), std::string::npos) << r.detail;

  // Flipping the first move leaves the grid.
  MoveSeq left = decode_moves(hilbert_a(), 2);
  left[0] = Move::left;
  const VerificationReport out = check_path_grid_coverage(to_path(left), 2);
  EXPECT_FALSE(out.passed);
  EXPECT_NE(out.detail.find("(-1,0) at index 1 lies outside the grid"), std::string::npos)
      << out.detail;

  // A path that retraces a step duplicates a point.
  const Path back{{0, 0}, {1, 0}, {0, 0}, {0, 1}};
  const VerificationReport dup = check_path_grid_coverage(back, 1);
  EXPECT_FALSE(dup.passed);
  EXPECT_NE(dup.detail.find("(0,0) visited twice"), std::string::npos) << dup.detail;

  const Path short_path{{0, 0}, {1, 0}, {1, 1}};
  const VerificationReport missing = check_path_grid_coverage(short_path, 1);
  EXPECT_FALSE(missing.passed);
  EXPECT_NE(missing.detail.find("(0,1) never visited"), std::string::npos) << missing.detail;
}

TEST(CheckPrefix, HilbertA) {
  EXPECT_TRUE(check_prefix(hilbert_a(), 1).passed);
  EXPECT_TRUE(check_prefix(hilbert_a(), 2).passed);
  const std::vector<int> g3 = fixtures::codes(decode_moves(hilbert_a(), 3));
  EXPECT_EQ(std::vector<int>(g3.begin(), g3.begin() + 16),
            (std::vector<int>{1, 2, -1, 2, 2, 1, -2, 1, 2, 1, -2, -2, -1, -2, 1, 1}));
  for (unsigned m = 0; m <= 9; ++m) EXPECT_TRUE(check_prefix(hilbert_a(), m).passed) << m;
}

// The point-exploding system alternates orientation between generations, so
// consecutive generations are not prefixes of one another; every second one
// is.
TEST(CheckPrefix, HilbertBAlternatesOrientation) {
  EXPECT_TRUE(check_prefix(hilbert_b(), 0).passed);
  for (unsigned m = 1; m <= 8; ++m) {
    const VerificationReport r = check_prefix(hilbert_b(), m);
    EXPECT_FALSE(r.passed) << m;
    EXPECT_NE(r.detail.find("move 0 differs"), std::string::npos) << r.detail;
    const MoveSeq shorter = decode_moves(hilbert_b(), m);
    const MoveSeq two_on = decode_moves(hilbert_b(), m + 2);
    EXPECT_TRUE(std::equal(shorter.begin(), shorter.end(), two_on.begin())) << m;
  }
}

TEST(CheckRecursion, HoldsUpToEight) {
  const VerificationReport r0 = check_recursion(0);
  EXPECT_TRUE(r0.passed);
  EXPECT_EQ(r0.detail, "7 symbols");
  for (unsigned n = 0; n <= 8; ++n) EXPECT_TRUE(check_recursion(n).passed) << n;
}

TEST(CheckRecursion, ViolationIsReportedWithPosition) {
  const VerificationReport r = check_recursion(hilbert_a(), 1);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.detail.empty());
}

TEST(CheckCrossSystem, AlternatesBetweenSwapAndIdentity) {
  const VerificationReport r1 = check_cross_system(1);
  EXPECT_TRUE(r1.passed);
  EXPECT_EQ(r1.detail, "axis_swap");
  const VerificationReport r2 = check_cross_system(2);
  EXPECT_TRUE(r2.passed);
  EXPECT_EQ(r2.detail, "identical");
  EXPECT_EQ(fixtures::codes(decode_moves(hilbert_b(), 2)), fixtures::golden_generation_2_moves);
  for (unsigned n = 1; n <= 6; ++n) {
    const VerificationReport r = check_cross_system(n);
    EXPECT_TRUE(r.passed) << n;
    EXPECT_EQ(r.detail, n % 2 == 1 ? "axis_swap" : "identical") << n;
  }
}

TEST(CheckCrossSystem, ReportsMismatch) {
  const VerificationReport r = check_cross_system(hilbert_a(), hilbert_a(), 1);
  EXPECT_TRUE(r.passed);
  // Different generations have different sizes.
  const Path a = decode_path(hilbert_a(), 1);
  const Path b = decode_path(hilbert_a(), 2);
  EXPECT_EQ(path_relation(a, b), PathRelation::none);
}

TEST(CheckSelfAvoiding, Examples) {
  EXPECT_TRUE(check_self_avoiding(decode_path(hilbert_a(), 2)).passed);
  const VerificationReport bad = check_self_avoiding({{0, 0}, {1, 0}, {0, 0}});
  EXPECT_FALSE(bad.passed);
  EXPECT_NE(bad.detail.find("(0,0)"), std::string::npos);
  EXPECT_TRUE(check_self_avoiding({{0, 0}}).passed);
  // Far-apart points use the sorting fallback.
  const VerificationReport far = check_self_avoiding({{0, 0}, {1 << 20, 1 << 20}, {0, 0}});
  EXPECT_FALSE(far.passed);
}

TEST(RunVerification, AllPassForHilbertA) {
  const auto reports = run_verification(hilbert_a(), 6);
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.check_name << " " << r.generation_index << ": " << r.detail;
    if (!r.passed) {
      EXPECT_FALSE(r.detail.empty());
    }
  }
}
