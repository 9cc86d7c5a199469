#pragma once

// Slow reference implementations used to check the library. None of these call
// into the library's own algorithms; they only share the plain data types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "wptcodes/code.hpp"

namespace oracle {

inline std::uint64_t pow_by_loop(std::uint64_t q, std::uint64_t x, std::uint64_t e) {
  std::uint64_t r = 1 % q;
  for (std::uint64_t i = 0; i < e; ++i) r = r * x % q;
  return r;
}

inline std::uint64_t order_by_loop(std::uint64_t q, std::uint64_t x) {
  std::uint64_t y = x % q, t = 1;
  while (y != 1) {
    y = y * x % q;
    ++t;
  }
  return t;
}

inline bool is_prime_by_loop(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Number of (m_0..m_n) >= 0 with sum m_i w_i == alpha, by plain recursion.
inline std::int64_t count_tuples(const std::vector<std::int64_t>& w, std::int64_t alpha, std::size_t i = 0) {
  if (alpha < 0) return 0;
  if (i + 1 == w.size()) return alpha % w[i] == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (std::int64_t m = 0; m * w[i] <= alpha; ++m) total += count_tuples(w, alpha - m * w[i], i + 1);
  return total;
}

inline bool representable(const std::vector<std::int64_t>& gens, std::int64_t x) { return count_tuples(gens, x) > 0; }

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Y_Q for w0 = 1 straight from the definition: normalized [1 : s_1^{w_1} : ... : s_n^{w_n}], s_i in F_q^*.
inline std::set<std::vector<std::uint64_t>> points_YQ(std::uint64_t q, const std::vector<std::int64_t>& w) {
  std::set<std::vector<std::uint64_t>> out;
  const std::size_t n = w.size() - 1;
  std::vector<std::uint64_t> s(n, 1);
  while (true) {
    std::vector<std::uint64_t> p{1};
    for (std::size_t i = 0; i < n; ++i) p.push_back(pow_by_loop(q, s[i], static_cast<std::uint64_t>(w[i + 1])));
    out.insert(p);
    std::size_t j = 0;
    while (j < n && s[j] == q - 1) s[j++] = 1;
    if (j == n) break;
    ++s[j];
  }
  return out;
}

// Rank by elimination with Fermat inverses.
inline std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t q) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] % q == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const std::uint64_t inv = pow_by_loop(q, a[r][c], q - 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      const std::uint64_t f = a[i][c] * inv % q;
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = (a[i][k] + (q - f) * a[r][k]) % q;
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<std::uint64_t>> rows_of(const wpt::GeneratorMatrix& m) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  return a;
}

// Enumerates all q^rows messages against the raw (possibly dependent) rows.
template <class Visit>
void for_each_codeword(const wpt::GeneratorMatrix& m, Visit visit) {
  const std::uint64_t q = m.field().q();
  std::vector<std::uint64_t> msg(m.rows(), 0), word(m.cols());
  while (true) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) word[c] = (word[c] + msg[r] * m.at(r, c)) % q;
    visit(word);
    std::size_t j = 0;
    while (j < msg.size() && msg[j] == q - 1) msg[j++] = 0;
    if (j == msg.size()) break;
    ++msg[j];
  }
}

inline std::int64_t min_distance(const wpt::GeneratorMatrix& m) {
  std::int64_t best = -1;
  for_each_codeword(m, [&](const std::vector<std::uint64_t>& w) {
    const auto wt = static_cast<std::int64_t>(std::count_if(w.begin(), w.end(), [](auto v) { return v != 0; }));
    if (wt > 0 && (best < 0 || wt < best)) best = wt;
  });
  return best;
}

// Distribution over distinct codewords (dependent rows are collapsed by the set).
inline std::vector<std::uint64_t> weight_distribution(const wpt::GeneratorMatrix& m) {
  std::set<std::vector<std::uint64_t>> seen;
  for_each_codeword(m, [&](const std::vector<std::uint64_t>& w) { seen.insert(w); });
  std::vector<std::uint64_t> out(m.cols() + 1, 0);
  for (const auto& w : seen) ++out[std::count_if(w.begin(), w.end(), [](auto v) { return v != 0; })];
  return out;
}

}  // namespace oracle
