#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "patgf/decomposition.hpp"

using namespace patgf;

TEST(Flatten, ReferenceValues) {
  EXPECT_EQ(flatten(std::vector<int>{5, 7, 6}), (Permutation{1, 3, 2}));
  EXPECT_EQ(flatten(std::vector<int>{2}), (Permutation{1}));
  EXPECT_EQ(flatten(std::vector<int>{2, 1, 3}), (Permutation{2, 1, 3}));
  EXPECT_EQ(flatten(std::vector<int>{}), Permutation{});
  EXPECT_THROW(flatten(std::vector<int>{4, 4}), Error);
}

TEST(RtlMaxima, ReferenceValues) {
  EXPECT_EQ(rtlMaxima(Permutation{2, 3, 1}), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(rtlMaxima(Permutation::identity(5)), (std::vector<std::size_t>{4}));
  EXPECT_EQ(rtlMaxima(Permutation{3, 2, 1}), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(CanonicalDecomposition, Shapes) {
  const auto d231 = canonicalDecompose(Permutation{2, 3, 1});
  ASSERT_EQ(d231.r(), 1);
  EXPECT_EQ(d231.blocks[0], (std::vector<int>{2}));
  EXPECT_EQ(d231.maxima[0].value, 3);
  EXPECT_TRUE(d231.blocks[1].empty());
  EXPECT_EQ(d231.maxima[1].value, 1);

  const auto d4213 = canonicalDecompose(Permutation{4, 2, 1, 3});
  ASSERT_EQ(d4213.r(), 1);
  EXPECT_TRUE(d4213.blocks[0].empty());
  EXPECT_EQ(d4213.maxima[0].value, 4);
  EXPECT_EQ(d4213.blocks[1], (std::vector<int>{2, 1}));
  EXPECT_EQ(d4213.maxima[1].value, 3);

  const auto did = canonicalDecompose(Permutation::identity(4));
  EXPECT_EQ(did.r(), 0);
  EXPECT_EQ(did.blocks[0], (std::vector<int>{1, 2, 3}));
}

TEST(CanonicalDecomposition, Errors) {
  try {
    canonicalDecompose(Permutation{1, 3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNot132Avoiding);
  }
  EXPECT_THROW(canonicalDecompose(Permutation{}), Error);
  EXPECT_THROW(canonicalDecompose(Permutation{2, 3, 1}).prefix(2), Error);
  EXPECT_THROW(canonicalDecompose(Permutation{2, 3, 1}).suffix(3), Error);
}

TEST(PrefixSuffix, ReferenceValues) {
  const Permutation p{2, 3, 1};
  EXPECT_EQ(prefix(p, 0), (Permutation{1}));
  EXPECT_EQ(prefix(p, 1), p);
  EXPECT_EQ(prefix(p, -1), Permutation{});
  EXPECT_EQ(prefix(Permutation{}, -1), Permutation{});
  EXPECT_EQ(suffix(p, 1), (Permutation{1}));
  EXPECT_EQ(suffix(p, 0), p);
  EXPECT_EQ(suffix(p, 2), Permutation{});
  EXPECT_EQ(suffix(Permutation{4, 2, 1, 3}, 1), (Permutation{2, 1, 3}));
  EXPECT_EQ(prefix(Permutation::identity(3), 0), Permutation::identity(2));
}

TEST(PrefixSuffix, ChainsAreNested) {
  // Every 132-avoider of length <= 6.
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    do {
      const Permutation p(e);
      if (!avoids132(p)) continue;
      const auto d = canonicalDecompose(p);
      for (int i = 0; i <= d.r(); ++i) {
        EXPECT_TRUE(containsPattern(d.prefix(i), d.prefix(i - 1))) << p.toString() << " i=" << i;
        EXPECT_TRUE(containsPattern(d.suffix(i), d.suffix(i + 1))) << p.toString() << " i=" << i;
        EXPECT_TRUE(containsPattern(d.throughMaximum(i), d.prefix(i)));
      }
      EXPECT_EQ(d.throughMaximum(d.r()), p);
    } while (std::next_permutation(e.begin(), e.end()));
  }
}

TEST(ContainsPattern, ReferenceValues) {
  EXPECT_TRUE(containsPattern(Permutation{1, 2, 3, 4}, Permutation{1, 2, 3}));
  EXPECT_TRUE(containsPattern(Permutation{2, 3, 1}, Permutation{1, 2}));
  EXPECT_FALSE(containsPattern(Permutation{3, 2, 1}, Permutation{1, 2}));
}
