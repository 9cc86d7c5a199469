#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wptcodes/code.hpp"
#include "wptcodes/distance.hpp"
#include "wptcodes/formulas.hpp"
#include "wptcodes/hilbert.hpp"
#include "wptcodes/parallel.hpp"

using namespace wpt;

namespace {

GeneratorMatrix code_of(std::uint64_t q, std::vector<std::int64_t> w, std::int64_t alpha) {
  const WeightedSpace s(make_field(q), std::move(w));
  return generator_matrix(s, alpha, enumerate_YQ(s));
}

GeneratorMatrix random_matrix(std::mt19937& rng, std::uint64_t q, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(q - 1));
  std::vector<std::uint32_t> e(rows * cols);
  for (auto& v : e) v = d(rng);
  return GeneratorMatrix(make_field(q), rows, cols, std::move(e));
}

}  // namespace

TEST(StandardMonomials, Examples) {
  const WeightedSpace s(make_field(5), {1, 1, 2});
  std::vector<std::string> names;
  for (const auto& m : standard_monomials(s, 2)) names.push_back(to_string(m));
  EXPECT_EQ(names, (std::vector<std::string>{"x0^2", "x0*x1", "x1^2", "x2"}));
  ASSERT_EQ(standard_monomials(s, 0).size(), 1u);
  EXPECT_EQ(to_string(standard_monomials(s, 0)[0]), "1");
  EXPECT_EQ(standard_monomials(s, 5).size(), 8u);
  EXPECT_EQ(standard_monomials(s, 9).size(), 8u);
  for (const auto& m : standard_monomials(s, 7)) {
    EXPECT_EQ(m.weighted_degree, 7);
    EXPECT_LT(m.exponents[1], 4);
    EXPECT_LT(m.exponents[2], 2);
  }
  EXPECT_THROW(standard_monomials(WeightedSpace(make_field(5), {2, 1, 1}), 2), Error);
}

TEST(GeneratorMatrix, Examples) {
  const auto m0 = code_of(5, {1, 1, 2}, 0);
  EXPECT_EQ(m0.rows(), 1u);
  EXPECT_EQ(m0.cols(), 8u);
  for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(m0.at(0, c), 1u);
  EXPECT_EQ(rank(m0), 1u);
  const auto m2 = code_of(5, {1, 1, 2}, 2);
  EXPECT_EQ(m2.rows(), 4u);
  EXPECT_EQ(rank(m2), 4u);
  EXPECT_EQ(rank(code_of(5, {1, 1, 2}, 3)), 6u);
  const auto small = code_of(3, {1, 1}, 1);
  EXPECT_EQ(small.entries(), (std::vector<std::uint32_t>{1, 1, 1, 2}));
  EXPECT_EQ(rank(small), 2u);
  EXPECT_EQ(rank(GeneratorMatrix(make_field(5), 0, 8, {})), 0u);
}

TEST(GeneratorMatrix, LogEvaluationMatchesDirectEvaluation) {
  for (std::uint64_t q : {5u, 7u, 13u}) {
    const WeightedSpace s(make_field(q), {1, 2, 3});
    const auto pts = enumerate_YQ(s);
    for (std::int64_t alpha = 0; alpha < 12; ++alpha) {
      const auto g = generator_matrix(s, alpha, pts);
      for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
          EXPECT_EQ(g.at(r, c), g.row_monomials()[r].evaluate(s.field(), pts[c].coords).value);
    }
  }
}

TEST(GeneratorMatrix, StandardRowsAreIndependentAndSpanAllMonomials) {
  for (std::uint64_t q : {3u, 5u, 7u})
    for (const auto& w : std::vector<std::vector<std::int64_t>>{{1, 1, 2}, {1, 2, 3}, {1, 1, 3}, {1, 1, 1, 2}}) {
      const WeightedSpace s(make_field(q), w);
      const auto pts = enumerate_YQ(s);
      for (std::int64_t alpha = 0; alpha <= 12; ++alpha) {
        const auto std_rows = generator_matrix(s, alpha, pts);
        const auto all_rows = evaluation_matrix(all_monomials(s, alpha), pts);
        EXPECT_EQ(rank(std_rows), std_rows.rows());
        EXPECT_EQ(rank(std_rows), rank(all_rows));
        EXPECT_EQ(rank(all_rows), oracle::rank_mod(oracle::rows_of(all_rows), q));
      }
    }
}

TEST(GeneratorMatrix, RejectsBadInput) {
  EXPECT_THROW(GeneratorMatrix(make_field(5), 1, 2, {1, 5}), Error);
  EXPECT_THROW(GeneratorMatrix(make_field(5), 2, 2, {1, 2}), Error);
  const WeightedSpace a(make_field(5), {1, 1, 2});
  const WeightedSpace b(make_field(5), {1, 1, 3});
  EXPECT_THROW(generator_matrix(a, 2, enumerate_YQ(b)), Error);
}

TEST(RowSpace, Membership) {
  const auto g = code_of(5, {1, 1, 2}, 1);
  std::vector<std::uint32_t> sum(g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c) sum[c] = (2 * g.at(0, c) + 3 * g.at(1, c)) % 5;
  EXPECT_TRUE(in_row_space(g, sum));
  std::vector<std::uint32_t> unit(g.cols(), 0);
  unit[0] = 1;
  EXPECT_FALSE(in_row_space(g, unit));
  EXPECT_EQ(hamming_weight(unit), 1u);
}

TEST(MinDistance, Examples) {
  EXPECT_EQ(min_distance_exhaustive(code_of(5, {1, 1, 2}, 2)), 4);
  EXPECT_EQ(min_distance_exhaustive(code_of(5, {1, 1, 3}, 6)), 3);
  try {
    min_distance_exhaustive(GeneratorMatrix(make_field(5), 0, 8, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyCode);
  }
}

TEST(MinDistance, MatchesFullEnumeration) {
  std::mt19937 rng(12345);
  for (int t = 0; t < 80; ++t) {
    const std::uint64_t q = std::vector<std::uint64_t>{2, 3, 5, 7}[t % 4];
    const std::size_t rows = 1 + rng() % (q == 7 ? 4 : 5);
    const std::size_t cols = rows + rng() % 6;
    auto m = random_matrix(rng, q, rows, cols);
    if (rank(m) == 0) continue;
    EXPECT_EQ(min_distance_exhaustive(m), oracle::min_distance(m)) << t;
    EXPECT_EQ(weight_distribution(m), oracle::weight_distribution(m)) << t;
  }
}

TEST(MinDistance, LargeFieldsUseWideElements) {
  std::mt19937 rng(99);
  for (std::uint64_t q : {131u, 257u}) {
    auto m = random_matrix(rng, q, 2, 5);
    EXPECT_EQ(min_distance_exhaustive(m, {default_search_budget, 1}), oracle::min_distance(m));
  }
  // q = 40009: the q + 1 projective classes of a 2-row code are (0,1) and (1,c)
  const std::uint64_t q = 40009;
  auto m = random_matrix(rng, q, 2, 6);
  auto weight = [&](std::uint64_t a, std::uint64_t b) {
    std::int64_t w = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) w += (a * m.at(0, c) + b * m.at(1, c)) % q != 0;
    return w;
  };
  std::int64_t best = weight(0, 1);
  for (std::uint64_t c = 0; c < q; ++c) best = std::min(best, weight(1, c));
  EXPECT_EQ(min_distance_exhaustive(m, {default_search_budget, 1}), best);
}

TEST(MinDistance, ThreadCountDoesNotChangeResults) {
  const auto g = code_of(7, {1, 1, 2}, 3);
  const auto d1 = min_distance_exhaustive(g, {default_search_budget, 1});
  const auto w1 = weight_distribution(g, {default_search_budget, 1});
  for (unsigned th : {2u, 3u, 8u}) {
    EXPECT_EQ(min_distance_exhaustive(g, {default_search_budget, th}), d1);
    EXPECT_EQ(weight_distribution(g, {default_search_budget, th}), w1);
  }
}

TEST(MinDistance, Budget) {
  const auto g = code_of(5, {1, 1, 3}, 11);  // K = 15
  try {
    min_distance_exhaustive(g);
    FAIL();
  } catch (const BudgetExceededError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    EXPECT_EQ(e.budget(), default_search_budget);
    EXPECT_EQ(e.required(), (std::uint64_t{30517578125} - 1) / 4 + 1);
  }
  // q^K/(q-1) <= budget admits the search
  const auto small = code_of(5, {1, 1, 2}, 1);  // K = 2, 25/4 -> needs budget 7
  EXPECT_THROW(min_distance_exhaustive(small, {6, 1}), BudgetExceededError);
  EXPECT_EQ(min_distance_exhaustive(small, {7, 1}), 6);
  EXPECT_THROW(min_distance_exhaustive(code_of(5, {1, 1, 2}, 0), {1, 1}), BudgetExceededError);
  EXPECT_EQ(projective_message_count(5, 15), (std::uint64_t{30517578125} - 1) / 4);
  EXPECT_EQ(projective_message_count(1000003, 40), std::numeric_limits<std::uint64_t>::max());
}

TEST(WeightDistribution, Examples) {
  const auto w0 = weight_distribution(code_of(5, {1, 1, 2}, 0));
  EXPECT_EQ(w0[0], 1u);
  EXPECT_EQ(w0[8], 4u);
  const auto empty = weight_distribution(GeneratorMatrix(make_field(5), 0, 8, {}));
  EXPECT_EQ(empty[0], 1u);
  EXPECT_EQ(std::accumulate(empty.begin(), empty.end(), std::uint64_t{0}), 1u);
  const auto w1 = weight_distribution(code_of(5, {1, 1, 2}, 1));
  std::size_t first = 1;
  while (w1[first] == 0) ++first;
  EXPECT_EQ(first, 6u);
  EXPECT_EQ(std::accumulate(w1.begin(), w1.end(), std::uint64_t{0}), 25u);
}

TEST(CodeProperties, MonotoneSingletonAndTrivial) {
  for (std::uint64_t q : {3u, 5u})
    for (const auto& w : std::vector<std::vector<std::int64_t>>{{1, 1, 2}, {1, 2, 3}, {1, 1, 1}}) {
      const WeightedSpace s(make_field(q), w);
      const auto pts = enumerate_YQ(s);
      const auto n = static_cast<std::int64_t>(pts.size());
      std::int64_t prev = n + 1;
      for (std::int64_t alpha = 0; alpha <= a_invariant_YQ(s) + 3; ++alpha) {
        const auto g = generator_matrix(s, alpha, pts);
        const auto k = static_cast<std::int64_t>(rank(g));
        std::int64_t d = 0;
        try {
          d = min_distance_exhaustive(g, {1'000'000, 0});
        } catch (const BudgetExceededError&) {
          continue;
        }
        EXPECT_LE(d, prev);
        EXPECT_LE(k + d, n + 1);
        if (in_regularity(s, alpha)) {
          EXPECT_EQ(k, n);
          EXPECT_EQ(d, 1);
        }
        prev = d;
      }
    }
}

TEST(Parallel, MapKeepsOrderAndRethrowsLowestIndex) {
  const auto v = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
  try {
    parallel_for(50, 1, [](std::size_t i) {
      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
  EXPECT_GE(resolve_threads(0), 1u);
  EXPECT_EQ(resolve_threads(3), 3u);
}
