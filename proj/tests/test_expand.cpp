#include <gtest/gtest.h>

#include "lsys/lsys.hpp"
#include "test_support.hpp"

using namespace lsys;
using lsys::fixtures::ints;

namespace {

Word collect(const LSystem& sys, std::uint64_t n) {
  Word out;
  stream_expand(sys, n, [&](Symbol s) { out.push_back(s); });
  return out;
}

}  // namespace

TEST(StreamExpand, SecondGeneration) {
  EXPECT_EQ(ints(hilbert_a(), collect(hilbert_a(), 2)), fixtures::golden_generation_2_word);
}

TEST(StreamExpand, DepthZeroEmitsStart) {
  Word out;
  EXPECT_EQ(stream_expand(hilbert_a(), 0, [&](Symbol s) { out.push_back(s); }), 1u);
  EXPECT_EQ(ints(hilbert_a(), out), (std::vector<int>{0}));
}

TEST(StreamExpand, HilbertBCount) {
  for (unsigned n = 0; n <= 6; ++n) {
    const std::uint64_t four_n = std::uint64_t{1} << (2 * n);
    EXPECT_EQ(stream_expand(hilbert_b(), n, [](Symbol) {}), 2 * four_n - 1) << "n=" << n;
    EXPECT_EQ(generation(hilbert_b(), n).size(), 2 * four_n - 1);
  }
}

TEST(StreamExpand, HilbertACountIsFourToTheN) {
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(stream_expand(hilbert_a(), n, [](Symbol) {}), std::uint64_t{1} << (2 * n));
  }
}

TEST(StreamExpand, EqualsMaterialized) {
  for (unsigned n = 0; n <= 8; ++n) {
    EXPECT_TRUE(stream_equals_materialized(hilbert_a(), n)) << "A n=" << n;
    EXPECT_TRUE(stream_equals_materialized(hilbert_b(), n)) << "B n=" << n;
  }
}

TEST(StreamExpand, MatchesIntegerReference) {
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(ints(hilbert_b(), collect(hilbert_b(), n)),
              fixtures::int_hilbert_b().generation({3}, n));
  }
}

TEST(StreamExpand, StackDepthBounded) {
  for (const LSystem* sys : {&hilbert_a(), &hilbert_b()}) {
    for (unsigned n = 0; n <= 10; ++n) {
      const StreamStats stats = stream_expand_stats(*sys, n, [](Symbol) {});
      EXPECT_LE(stats.peak_stack_depth, n + 1);
      EXPECT_EQ(stats.peak_stack_depth, n + 1);
    }
  }
}

TEST(StreamExpand, NonSymmetricMorphism) {
  auto alphabet = make_alphabet({{"a", true}, {"b", true}});
  const Morphism m(alphabet, {{positive(0), negative(1)}, {positive(1), positive(1)}}, false,
                   {{negative(1), positive(0)}, {negative(0)}});
  const LSystem sys("asym", m, {positive(0)},
                    Interpretation({Action::step(1, 0), Action::step(0, 1)}));
  for (unsigned n = 0; n <= 6; ++n) EXPECT_TRUE(stream_equals_materialized(sys, n));
}

TEST(StreamExpand, EmptyImages) {
  auto alphabet = make_alphabet({{"a", true}, {"e", true}});
  const Morphism m(alphabet, {{positive(1), positive(0), positive(1)}, {}}, true);
  const LSystem sys("erase", m, {positive(0)},
                    Interpretation({Action::step(1, 0), Action::skip()}));
  for (unsigned n = 0; n <= 5; ++n) EXPECT_TRUE(stream_equals_materialized(sys, n));
  EXPECT_EQ(stream_expand(sys, 3, [](Symbol) {}), 3u);
}

TEST(StreamExpand, SinkFailures) {
  std::size_t seen = 0;
  EXPECT_THROW(stream_expand(hilbert_a(), 3, [&](Symbol) { return ++seen < 5; }), SinkFailure);
  EXPECT_EQ(seen, 5u);
  EXPECT_THROW(stream_expand(hilbert_a(), 3, [](Symbol) { throw std::runtime_error("full"); }),
               std::runtime_error);
}

TEST(ExpansionCursor, PullsLazily) {
  ExpansionCursor cursor(hilbert_a(), 12);
  // The first symbols of any generation are the origin and the opening
  // 3/4 run; nothing close to 4^12 symbols is held.
  for (int i = 0; i < 10; ++i) ASSERT_TRUE(cursor.next().has_value());
  EXPECT_EQ(cursor.emitted(), 10u);
  EXPECT_LE(cursor.peak_stack_depth(), 13u);
}
