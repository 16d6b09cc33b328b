#include <gtest/gtest.h>

#include "patgf/catalog.hpp"
#include "patgf/census.hpp"

using namespace patgf;

namespace {

RationalFunction rf(std::initializer_list<long long> num, std::initializer_list<long long> den) {
  return RationalFunction(Polynomial(num), Polynomial(den));
}

PatternSet without(const PatternSet& family, const Permutation& t) {
  PatternSet out;
  for (const auto& u : family)
    if (u != t) out.push_back(u);
  return out;
}

}  // namespace

TEST(Ulk, Members) {
  EXPECT_EQ(formatPatternSet(ulkPatterns(3, 2)), "123;213");
  EXPECT_EQ(ulkPatterns(5, 3).size(), 6u);
  EXPECT_EQ(ulkPatterns(4, 1), PatternSet{Permutation::identity(4)});
  EXPECT_THROW(ulkPatterns(2, 3), Error);
  EXPECT_EQ(appendLargest(parsePatternSet("12;21")), ulkPatterns(3, 2));
}

TEST(Ulk, LiftByLargest) {
  EXPECT_EQ(liftByLargest(RationalFunction(Polynomial{1, 1})), rf({1}, {1, -1, -1}));
  EXPECT_EQ(liftByLargest(RationalFunction::constant(1)), rf({1}, {1, -1}));
  EXPECT_EQ(liftByLargest(rf({1, -1}, {1, -2})), rf({1, -2}, {1, -3, 1}));
  EXPECT_THROW(liftByLargest(RationalFunction(Polynomial{0, -1}) / RationalFunction(Polynomial{0, 0, -1})), Error);
}

TEST(Ulk, AvoidClosedForms) {
  EXPECT_EQ(gfAvoidUlk(3, 2), rf({1}, {1, -1, -1}));
  EXPECT_EQ(gfAvoidUlk(4, 2), rf({1, -1, -1}, {1, -2, -1}));
  EXPECT_EQ(gfAvoidUlk(3, 1), rf({1, -1}, {1, -2}));
  for (int l = 1; l <= 4; ++l) EXPECT_EQ(gfAvoidUlk(l, l), RationalFunction(catalanPolynomial(l)));
}

TEST(Ulk, AvoidAgreesWithRecurrence) {
  GfEngine engine;
  for (int l = 1; l <= 2; ++l)
    for (int k = l; k <= 6; ++k) EXPECT_EQ(gfAvoidUlk(k, l), engine.avoid(ulkPatterns(k, l))) << k << "," << l;
  EXPECT_EQ(gfAvoidUlk(5, 3), engine.avoid(ulkPatterns(5, 3)));
}

TEST(Ulk, ExactOnceClosedForms) {
  EXPECT_EQ(gfExactOnceUlk(2, 1, Permutation{1, 2}), rf({0, 0, 1}, {1, -2, 1}));
  EXPECT_EQ(gfExactOnceUlk(3, 1, Permutation{1, 2, 3}), rf({0, 0, 0, 1}, {1, -4, 4}));
  const Polynomial d{1, -1, -1};
  EXPECT_EQ(gfExactOnceUlk(3, 2, Permutation{2, 1, 3}), RationalFunction(Polynomial::monomial(3), d * d));
  EXPECT_THROW(gfExactOnceUlk(3, 2, Permutation{3, 2, 1}), Error);
  EXPECT_THROW(gfExactOnceUlk(3, 3, Permutation{1, 2, 3}), Error);
  EXPECT_TRUE(gfExactOnceUlk(4, 3, Permutation{1, 3, 2, 4}).isZero());
}

TEST(Ulk, ExactOnceAgreesWithRecurrence) {
  GfEngine engine;
  for (auto [k, l] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 2}, {4, 3}}) {
    const auto family = ulkPatterns(k, l);
    for (const auto& t : family)
      EXPECT_EQ(gfExactOnceUlk(k, l, t), engine.exact(without(family, t), {t})) << k << "," << l << " " << t.toString();
  }
}

TEST(HalfGraded, OddPowersAreRejected) {
  const HalfGraded odd{RationalFunction::constant(1), 1};
  EXPECT_THROW(odd.reduce(), Error);
  const HalfGraded even{RationalFunction::constant(1), 4};
  EXPECT_EQ(even.reduce(), RationalFunction(Polynomial::monomial(2)));
  EXPECT_EQ((HalfGraded{RationalFunction::constant(1), -2}).reduce(),
            RationalFunction::constant(1) / RationalFunction(Polynomial::x()));
}

TEST(BothOnceU2k, ClosedSum) {
  EXPECT_TRUE(gfBothOnceU2k(3).isZero());
  EXPECT_TRUE(gfBothOnceU2k(4).isZero());
  EXPECT_FALSE(gfBothOnceU2k(5).isZero());
  EXPECT_EQ(gfBothOnceU2k(5).num().valuation(), 9);
  EXPECT_THROW(gfBothOnceU2k(2), Error);
}

TEST(BothOnceU2k, TrueCounts) {
  // Exhaustive counts of 132-avoiders containing 12..k and 213..k exactly once.
  const std::vector<std::vector<std::uint64_t>> expected{
      {0, 0, 0, 0, 0, 0, 2, 6, 18, 44},
      {0, 0, 0, 0, 0, 0, 0, 2, 12, 54},
      {0, 0, 0, 0, 0, 0, 0, 0, 2, 16},
  };
  for (int k = 3; k <= 5; ++k) {
    const PatternQuery q(parsePatternSet("132"), ulkPatterns(k, 2));
    EXPECT_EQ(censusSeries(q, 9), expected[k - 3]);
    EXPECT_EQ(gfBothOnceU2kCorrected(k).series(9), PowerSeries::fromCounts(expected[k - 3]));
  }
}

TEST(BothOnceU2k, CorrectedFormAgreesWithRecurrence) {
  GfEngine engine;
  EXPECT_EQ(gfBothOnceU2kCorrected(3, engine), rf({0, 0, 0, 0, 0, 0, 2}, {1, -3, 0, 5, 0, -3, -1}));
  for (int k = 4; k <= 6; ++k) EXPECT_EQ(gfBothOnceU2kCorrected(k, engine), engine.exact({}, ulkPatterns(k, 2)));
}
