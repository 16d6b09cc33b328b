#include <gtest/gtest.h>

#include "oracle.hpp"
#include "patgf/census.hpp"

using namespace patgf;

TEST(Census, ReferenceCounts) {
  EXPECT_EQ(census(PatternQuery(parsePatternSet("132")), 3), 5u);
  EXPECT_EQ(census(PatternQuery(parsePatternSet("132;123;213")), 4), 5u);
  EXPECT_EQ(census(PatternQuery{}, 4), 24u);
  EXPECT_EQ(census(PatternQuery{}, 0), 1u);
}

TEST(Census, ReferenceSeries) {
  EXPECT_EQ(censusSeries(PatternQuery(parsePatternSet("132;123;213")), 5),
            (std::vector<std::uint64_t>{1, 1, 2, 3, 5, 8}));
  EXPECT_EQ(censusSeries(PatternQuery({Permutation{}}), 3), (std::vector<std::uint64_t>{0, 0, 0, 0}));
  EXPECT_EQ(censusSeries(PatternQuery({}, parsePatternSet("12")), 4), (std::vector<std::uint64_t>{0, 0, 1, 2, 3}));
}

TEST(Census, AgreesWithNaiveEnumeration) {
  const std::vector<naive::Query> queries{
      {{{1, 3, 2}}, {}, {}},
      {{{1, 3, 2}, {1, 2, 3}}, {{2, 1}}, {}},
      {{}, {{1, 2}}, {{2, 1}}},
      {{{2, 3, 1}}, {}, {{1, 2, 3}}},
      {{}, {{2, 1, 3}, {1, 2, 3}}, {}},
  };
  for (const auto& nq : queries) {
    const auto conv = [](const std::vector<std::vector<int>>& v) {
      PatternSet out;
      for (const auto& p : v) out.emplace_back(p);
      return out;
    };
    const PatternQuery q(conv(nq.avoid), conv(nq.once), conv(nq.at_least));
    EXPECT_EQ(censusSeries(q, 7), naive::series(nq, 7));
  }
}

TEST(Census, ThreadCountDoesNotChangeResult) {
  const PatternQuery q(parsePatternSet("132"), parsePatternSet("123"));
  CensusOptions one{.max_n = 10, .threads = 1};
  CensusOptions four{.max_n = 10, .threads = 4};
  EXPECT_EQ(census(q, 8, one), census(q, 8, four));
}

TEST(Census, RefusesLengthsAboveBound) {
  try {
    census(PatternQuery{}, 11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthTooLarge);
  }
  EXPECT_THROW(census(PatternQuery{}, 5, CensusOptions{.max_n = 4}), Error);
}

TEST(Census, OverlappingSetsAreRejected) {
  EXPECT_THROW(PatternQuery(parsePatternSet("12"), parsePatternSet("12")), Error);
}

TEST(Census, With132IsIdempotent) {
  const PatternQuery q(parsePatternSet("132;231"));
  EXPECT_EQ(q.with132(), q);
}
