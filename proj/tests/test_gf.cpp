#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "wptcodes/gf.hpp"

using namespace wpt;

TEST(PrimeField, SmallestPrimitiveRoot) {
  EXPECT_EQ(make_field(2).eta().value, 1u);
  EXPECT_EQ(make_field(5).eta().value, 2u);
  EXPECT_EQ(make_field(7).eta().value, 3u);
  EXPECT_EQ(make_field(31).eta().value, 3u);
}

TEST(PrimeField, RejectsComposites) {
  for (std::uint64_t q : {0u, 1u, 4u, 6u, 9u, 15u, 49u}) {
    try {
      make_field(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
    }
  }
}

TEST(PrimeField, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 500; ++n) EXPECT_EQ(detail::is_prime(n), oracle::is_prime_by_loop(n)) << n;
}

TEST(PrimeField, EtaGeneratesTheGroup) {
  for (std::uint64_t q = 2; q < 200; ++q) {
    if (!oracle::is_prime_by_loop(q)) continue;
    const auto f = make_field(q);
    EXPECT_EQ(oracle::order_by_loop(q, f.eta().value), q - 1) << q;
    for (std::uint64_t g = 1; g < f.eta().value; ++g) EXPECT_LT(oracle::order_by_loop(q, g), q - 1);
  }
}

TEST(PrimeField, PowExamples) {
  const auto f = make_field(5);
  EXPECT_EQ(f.pow({3}, 0).value, 1u);
  EXPECT_EQ(f.pow({2}, 4).value, 1u);
  EXPECT_EQ(f.pow({2}, -1).value, 3u);
  EXPECT_EQ(f.pow({0}, 0).value, 1u);
  EXPECT_EQ(f.pow({0}, 3).value, 0u);
  try {
    f.pow({0}, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInverse);
  }
}

TEST(PrimeField, FermatHoldsForAllNonzero) {
  for (std::uint64_t q = 2; q <= 100; ++q) {
    if (!oracle::is_prime_by_loop(q)) continue;
    const auto f = make_field(q);
    for (std::uint64_t x = 1; x < q; ++x) EXPECT_EQ(f.pow({x}, static_cast<std::int64_t>(q - 1)).value, 1u);
  }
}

TEST(PrimeField, PowMatchesRepeatedMultiplication) {
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    const auto f = make_field(q);
    for (std::uint64_t x = 0; x < q; ++x)
      for (std::int64_t e = 0; e <= 50; ++e)
        EXPECT_EQ(f.pow({x}, e).value, oracle::pow_by_loop(q, x, static_cast<std::uint64_t>(e)));
  }
}

TEST(PrimeField, ArithmeticAgainstIntegers) {
  const auto f = make_field(13);
  for (std::uint64_t a = 0; a < 13; ++a)
    for (std::uint64_t b = 0; b < 13; ++b) {
      EXPECT_EQ(f.add({a}, {b}).value, (a + b) % 13);
      EXPECT_EQ(f.sub({a}, {b}).value, (a + 13 - b) % 13);
      EXPECT_EQ(f.mul({a}, {b}).value, a * b % 13);
      if (b) {
        EXPECT_EQ(f.mul(f.inv({b}), {b}).value, 1u);
      }
    }
  EXPECT_EQ(f.elem(-1).value, 12u);
  EXPECT_EQ(f.neg({0}).value, 0u);
  EXPECT_THROW(f.inv({0}), Error);
}

TEST(PrimeField, WideModulusDoesNotOverflow) {
  const auto f = make_field(4294967291u);  // largest 32-bit prime
  const FieldElem x{4294967290u};          // -1
  EXPECT_EQ(f.mul(x, x).value, 1u);
  EXPECT_EQ(f.pow(x, 1000001).value, 4294967290u);
}

TEST(ElementOrder, Examples) {
  const auto f = make_field(5);
  EXPECT_EQ(element_order(f, {1}), 1u);
  EXPECT_EQ(element_order(f, {4}), 2u);
  EXPECT_EQ(element_order(f, {3}), 4u);
  try {
    element_order(f, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroElement);
  }
}

TEST(ElementOrder, PowerOfEtaHasOrderDi) {
  for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u, 31u, 37u}) {
    const auto f = make_field(q);
    for (std::int64_t w = 1; w <= 40; ++w) {
      const auto expect = (q - 1) / std::gcd(q - 1, static_cast<std::uint64_t>(w));
      EXPECT_EQ(f.element_order(f.eta_pow(w)), expect) << q << " " << w;
      EXPECT_EQ(oracle::order_by_loop(q, f.eta_pow(w).value), expect);
    }
  }
}
