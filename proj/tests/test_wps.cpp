#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wptcodes/wps.hpp"

using namespace wpt;

TEST(WeightedSpace, OrdersAndReducedWeights) {
  const WeightedSpace s(make_field(5), {1, 1, 2});
  EXPECT_EQ(s.n(), 2u);
  EXPECT_EQ(s.orders(), (std::vector<std::int64_t>{4, 4, 2}));
  EXPECT_EQ(s.reduced_weights(), (std::vector<std::int64_t>{1, 1, 1}));
  const WeightedSpace t(make_field(5), {1, 1, 3});
  EXPECT_EQ(t.order(2), 4);
  EXPECT_EQ(t.reduced_weight(2), 3);
  EXPECT_EQ(t.describe(), "P(1,1,3) over F_5");
}

TEST(WeightedSpace, InvariantsHoldOnASweep) {
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 13u, 31u})
    for (std::int64_t a = 1; a <= 12; ++a)
      for (std::int64_t b = 1; b <= 12; ++b) {
        const WeightedSpace s(make_field(q), {1, a, b});
        for (std::size_t i = 0; i <= 2; ++i) {
          const auto g = static_cast<std::int64_t>(std::gcd<std::int64_t>(q - 1, s.weight(i)));
          EXPECT_EQ(s.order(i) * g, static_cast<std::int64_t>(q - 1));
          EXPECT_EQ(s.reduced_weight(i) * g, s.weight(i));
        }
      }
}

TEST(WeightedSpace, RejectsBadWeights) {
  const auto f = make_field(5);
  for (auto w : std::vector<std::vector<std::int64_t>>{{1}, {}, {0, 1}, {1, -2}, {2, 4}, {3, 6, 9}}) {
    try {
      WeightedSpace s(f, w);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidWeights);
    }
  }
}

TEST(GradedDimension, Examples) {
  const std::vector<std::int64_t> w{1, 1, 2};
  EXPECT_EQ(graded_dimension(w, 4), 9);
  EXPECT_EQ(graded_dimension(w, 5), 12);
  EXPECT_EQ(graded_dimension(w, -3), 0);
  EXPECT_EQ(graded_dimension(std::vector<std::int64_t>{2, 3}, 1), 0);
}

TEST(GradedDimension, MatchesTupleCount) {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<std::int64_t> wd(1, 10);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t len = 1 + trial % 4;  // n <= 3
    std::vector<std::int64_t> w(len);
    for (auto& x : w) x = wd(rng);
    for (std::int64_t alpha = 0; alpha <= 60; ++alpha)
      ASSERT_EQ(graded_dimension(w, alpha), oracle::count_tuples(w, alpha)) << trial << " " << alpha;
  }
}

TEST(GradedDimension, AllOnesIsBinomial) {
  for (std::int64_t n = 0; n <= 4; ++n) {
    const std::vector<std::int64_t> w(static_cast<std::size_t>(n + 1), 1);
    for (std::int64_t alpha = 0; alpha <= 30; ++alpha)
      EXPECT_EQ(graded_dimension(w, alpha), oracle::binomial(alpha + n, n));
  }
}

TEST(GradedDimension, OverflowIsReported) {
  const std::vector<std::int64_t> w(8, 1);
  EXPECT_THROW(graded_dimension(w, 2000000), Error);
}

TEST(Semigroup, Membership) {
  EXPECT_TRUE(semigroup_contains(std::vector<std::int64_t>{1, 2, 3}, 1));
  EXPECT_FALSE(semigroup_contains(std::vector<std::int64_t>{2, 3}, 1));
  EXPECT_TRUE(semigroup_contains(std::vector<std::int64_t>{2, 3}, 7));
  EXPECT_TRUE(semigroup_contains(std::vector<std::int64_t>{2, 3}, 0));
  EXPECT_FALSE(semigroup_contains(std::vector<std::int64_t>{2, 3}, -1));
  for (std::int64_t x = 0; x < 40; ++x)
    EXPECT_EQ(semigroup_contains(std::vector<std::int64_t>{4, 7}, x), oracle::representable({4, 7}, x));
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(frobenius_number(std::vector<std::int64_t>{1, 4, 9}), -1);
  EXPECT_EQ(frobenius_number(std::vector<std::int64_t>{3, 5}), 7);
  try {
    frobenius_number(std::vector<std::int64_t>{2, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
}

TEST(Frobenius, IsTheLargestGap) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> gd(2, 15);
  int checked = 0;
  while (checked < 40) {
    std::vector<std::int64_t> g{gd(rng), gd(rng), gd(rng)};
    if (std::gcd(std::gcd(g[0], g[1]), g[2]) != 1) continue;
    ++checked;
    const auto f = frobenius_number(g);
    if (f >= 0) {
      EXPECT_FALSE(oracle::representable(g, f));
    }
    const auto hi = *std::min_element(g.begin(), g.end());
    for (std::int64_t x = f + 1; x <= f + hi + 5; ++x) EXPECT_TRUE(oracle::representable(g, x)) << x;
  }
}

TEST(Frobenius, TwoGeneratorClosedForm) {
  for (std::int64_t a = 2; a <= 12; ++a)
    for (std::int64_t b = a + 1; b <= 13; ++b)
      if (std::gcd(a, b) == 1) {
        EXPECT_EQ(frobenius_number(std::vector<std::int64_t>{a, b}), a * b - a - b);
      }
}
