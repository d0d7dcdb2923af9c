#include <gtest/gtest.h>

#include "lsys/lsys.hpp"

using namespace lsys;

namespace {

const BenchResult& row(const std::vector<BenchResult>& rows, std::uint64_t n, BenchStrategy s) {
  for (const auto& r : rows) {
    if (r.n == n && r.strategy == s) return r;
  }
  throw std::logic_error("row not found");
}

}  // namespace

TEST(RunBench, HundredReportsPlanOnly) {
  const std::vector<std::uint64_t> ns{100};
  const auto rows = run_bench(hilbert_a(), ns);
  const BenchResult& sq = row(rows, 100, BenchStrategy::repeated_squaring);
  EXPECT_TRUE(sq.skipped);
  EXPECT_LE(sq.compositions_or_applications, 9u);
  EXPECT_EQ(sq.compositions_or_applications, plan_power(100).total_compositions);
  EXPECT_TRUE(row(rows, 100, BenchStrategy::iterative).skipped);
  EXPECT_TRUE(row(rows, 100, BenchStrategy::streaming).skipped);
}

TEST(RunBench, ExponentOne) {
  const std::vector<std::uint64_t> ns{1};
  const auto rows = run_bench(hilbert_a(), ns);
  EXPECT_EQ(row(rows, 1, BenchStrategy::iterative).compositions_or_applications, 1u);
  EXPECT_EQ(row(rows, 1, BenchStrategy::repeated_squaring).compositions_or_applications, 0u);
}

TEST(RunBench, ExponentEightStrategiesAgree) {
  const std::vector<std::uint64_t> ns{8};
  for (const LSystem* sys : {&hilbert_a(), &hilbert_b()}) {
    const auto rows = run_bench(*sys, ns);
    const BenchResult& it = row(rows, 8, BenchStrategy::iterative);
    const BenchResult& sq = row(rows, 8, BenchStrategy::repeated_squaring);
    const BenchResult& st = row(rows, 8, BenchStrategy::streaming);
    EXPECT_EQ(it.compositions_or_applications, 8u);
    EXPECT_EQ(sq.compositions_or_applications, 3u);
    ASSERT_TRUE(sq.matches_iterative.has_value());
    EXPECT_TRUE(*sq.matches_iterative);
    ASSERT_TRUE(st.matches_iterative.has_value());
    EXPECT_TRUE(*st.matches_iterative);
    EXPECT_EQ(st.peak_symbols, 9u);
    EXPECT_EQ(it.output_symbols, generation_length(*sys, 8));
    EXPECT_EQ(sq.output_symbols, it.output_symbols);
    EXPECT_EQ(st.output_symbols, it.output_symbols);
  }
}

TEST(RunBench, SquaringCountFollowsPlan) {
  const std::vector<std::uint64_t> ns{0, 1, 2, 3, 5, 6, 7, 9};
  const auto rows = run_bench(hilbert_a(), ns);
  for (std::uint64_t n : ns) {
    EXPECT_EQ(row(rows, n, BenchStrategy::repeated_squaring).compositions_or_applications,
              plan_power(n).total_compositions);
    EXPECT_EQ(row(rows, n, BenchStrategy::iterative).compositions_or_applications, n);
  }
}

TEST(RunBench, SmallCapSkipsRowsButContinues) {
  BenchOptions opts;
  opts.symbol_cap = 1000;
  const std::vector<std::uint64_t> ns{3, 9};
  const auto rows = run_bench(hilbert_a(), ns, opts);
  EXPECT_FALSE(row(rows, 3, BenchStrategy::iterative).skipped);
  EXPECT_TRUE(row(rows, 9, BenchStrategy::iterative).skipped);
  EXPECT_TRUE(row(rows, 9, BenchStrategy::repeated_squaring).skipped);
  EXPECT_FALSE(row(rows, 9, BenchStrategy::streaming).skipped);
}
