#include <gtest/gtest.h>

#include "patgf/chebyshev.hpp"
#include "patgf/verify.hpp"

using namespace patgf;

TEST(ReducedChebyshev, ReferenceValues) {
  EXPECT_TRUE(reducedChebyshev(-1).isZero());
  EXPECT_EQ(reducedChebyshev(0), (Polynomial{1}));
  EXPECT_EQ(reducedChebyshev(2), (Polynomial{1, -1}));
  EXPECT_EQ(reducedChebyshev(4), (Polynomial{1, -3, 1}));
  EXPECT_THROW(reducedChebyshev(-2), Error);
}

TEST(ContinuedFraction, ReferenceValues) {
  const RationalFunction zero;
  const RationalFunction one_plus_x = Polynomial{1, 1};
  EXPECT_EQ(cfIterative(1, zero), RationalFunction::constant(1));
  EXPECT_EQ(cfIterative(3, zero), RationalFunction(Polynomial{1, -1}, Polynomial{1, -2}));
  EXPECT_EQ(cfIterative(2, one_plus_x), RationalFunction(Polynomial{1, -1, -1}, Polynomial{1, -2, -1}));
  EXPECT_EQ(cfClosed(3, zero), RationalFunction(Polynomial{1, -1}, Polynomial{1, -2}));
  EXPECT_EQ(cfProductClosed(1, zero), RationalFunction::constant(1));
  EXPECT_EQ(cfProductClosed(3, zero), RationalFunction(Polynomial{1}, Polynomial{1, -2}));
  EXPECT_EQ(cfProductClosed(2, one_plus_x), RationalFunction(Polynomial{1}, Polynomial{1, -2, -1}));
}

TEST(ContinuedFraction, ClosedFormsMatchIterationOnBattery) {
  for (const auto& e : verify::continuedFractionBattery()) {
    RationalFunction product = RationalFunction::constant(1);
    for (int k = 1; k <= 16; ++k) {
      const RationalFunction it = cfIterative(k, e);
      product *= it;
      ASSERT_EQ(cfClosed(k, e), it) << "k=" << k << " E=" << e.toString();
      ASSERT_EQ(cfProductClosed(k, e), product) << "k=" << k << " E=" << e.toString();
    }
  }
}

TEST(ContinuedFraction, FirstStepIsGeometric) {
  for (const auto& e : verify::continuedFractionBattery()) {
    const RationalFunction den = RationalFunction::constant(1) - RationalFunction(Polynomial::x()) * e;
    if (!den.isZero()) EXPECT_EQ(cfClosed(1, e), RationalFunction::constant(1) / den);
  }
}

TEST(ContinuedFraction, UnitSeedShiftsIndex) {
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(cfClosed(k, RationalFunction::constant(1)), cfClosed(k + 1, RationalFunction{}));
}

TEST(ContinuedFraction, CatalanPrefix) {
  const PowerSeries catalan = catalanSeries(12);
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(cfIterative(k, RationalFunction{}).series(k - 1), catalan.truncated(k - 1));
}

TEST(ReducedW, ReferenceValues) {
  EXPECT_EQ(reducedW(3, 1), (Polynomial{1, -1, -1}));
  EXPECT_EQ(reducedW(5, 1), (Polynomial{1, -3, 0, 1}));
  EXPECT_EQ(reducedW(2, 2, BelowRange::kTreatAsZero), (Polynomial{1}));
  EXPECT_THROW(reducedW(2, 2), Error);
  EXPECT_THROW(reducedW(1, 2, BelowRange::kTreatAsZero), Error);
}

TEST(Catalan, ReferenceValues) {
  EXPECT_EQ(catalanSeries(3), PowerSeries::fromCounts({1, 1, 2, 5}));
  EXPECT_EQ(catalanSeries(5), PowerSeries::fromCounts({1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(catalanPolynomial(3), (Polynomial{1, 1, 2}));
}
