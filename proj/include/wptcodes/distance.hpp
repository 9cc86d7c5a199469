#pragma once

// Exhaustive minimum distance and weight distribution.
//
// Only one message per projective class is visited: for each leading row p the
// message is row p plus every combination of rows p+1..K-1, walked in modular
// q-ary Gray order so that each step adds a single basis row. The walk is cut
// into fixed-size work units that depend only on (q, K); workers reduce by min
// or elementwise sum, so results do not depend on the thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <vector>

#include "wptcodes/code.hpp"
#include "wptcodes/error.hpp"
#include "wptcodes/parallel.hpp"

namespace wpt {

inline constexpr std::uint64_t default_search_budget = 100'000'000;

struct SearchOptions {
  /// Upper limit on (q^K - 1)/(q - 1), the number of messages visited.
  std::uint64_t budget = default_search_budget;
  /// 0 = available parallelism.
  unsigned threads = 0;
};

/// (q^k - 1)/(q - 1), saturating at UINT64_MAX.
inline std::uint64_t projective_message_count(std::uint64_t q, std::size_t k) {
  unsigned __int128 total = 0, power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += power;  // sum of q^i for i < k
    power *= q;
    if (total > std::numeric_limits<std::uint64_t>::max() || power > (static_cast<unsigned __int128>(1) << 100))
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

namespace detail {

inline constexpr std::uint64_t search_unit_length = 1U << 15;

struct SearchUnit {
  std::size_t lead;     // leading row
  std::uint64_t begin;  // Gray-walk index range over the trailing rows
  std::uint64_t end;
};

inline std::vector<SearchUnit> search_units(std::uint64_t q, std::size_t k) {
  std::vector<SearchUnit> units;
  for (std::size_t p = 0; p < k; ++p) {
    std::uint64_t span = 1;
    for (std::size_t i = p + 1; i < k; ++i) span *= q;
    for (std::uint64_t b = 0; b < span; b += search_unit_length)
      units.push_back({p, b, std::min(span, b + search_unit_length)});
  }
  return units;
}

template <class Elem>
class GrayWalker {
 public:
  GrayWalker(const std::vector<std::vector<Elem>>& basis, Elem q) : basis_(basis), q_(q), n_(basis.at(0).size()) {}

  /// Calls visit(weight) for each message of the unit; stops early if visit returns false.
  template <class Visit>
  void run(const SearchUnit& u, Visit&& visit) {
    const std::size_t free = basis_.size() - 1 - u.lead;
    digits_.assign(free + 1, 0);
    std::uint64_t idx = u.begin;
    for (std::size_t i = 0; i < free; ++i) {
      digits_[i] = static_cast<std::uint32_t>(idx % q_);
      idx /= q_;
    }
    word_.assign(basis_[u.lead].begin(), basis_[u.lead].end());
    for (std::size_t i = 0; i < free; ++i) {
      const std::uint32_t g = (digits_[i] + q_ - digits_[i + 1]) % q_;
      for (std::uint32_t t = 0; t < g; ++t) add_row(basis_[u.lead + 1 + i]);
    }
    for (std::uint64_t t = u.begin; t < u.end; ++t) {
      if (!visit(weight())) return;
      if (t + 1 == u.end) break;
      std::size_t j = 0;
      while (digits_[j] == static_cast<std::uint32_t>(q_ - 1)) digits_[j++] = 0;
      ++digits_[j];
      add_row(basis_[u.lead + 1 + j]);
    }
  }

 private:
  void add_row(const std::vector<Elem>& r) {
    Elem* w = word_.data();
    const Elem* s = r.data();
    const Elem q = q_;
    for (std::size_t c = 0; c < n_; ++c) {
      const Elem v = static_cast<Elem>(w[c] + s[c]);
      w[c] = v >= q ? static_cast<Elem>(v - q) : v;
    }
  }

  std::size_t weight() const {
    std::size_t wt = 0;
    for (std::size_t c = 0; c < n_; ++c) wt += word_[c] != 0;
    return wt;
  }

  const std::vector<std::vector<Elem>>& basis_;
  Elem q_;
  std::size_t n_;
  std::vector<Elem> word_;
  std::vector<std::uint32_t> digits_;
};

template <class Elem>
std::vector<std::vector<Elem>> convert_basis(const std::vector<std::vector<std::uint32_t>>& basis) {
  std::vector<std::vector<Elem>> out;
  out.reserve(basis.size());
  for (const auto& r : basis) out.emplace_back(r.begin(), r.end());
  return out;
}

template <class Elem>
std::int64_t min_distance_impl(const std::vector<std::vector<std::uint32_t>>& basis32, std::uint64_t q,
                               unsigned threads) {
  const auto basis = convert_basis<Elem>(basis32);
  const auto units = search_units(q, basis.size());
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  parallel_for(units.size(), threads, [&](std::size_t i) {
    if (best.load(std::memory_order_relaxed) <= 1) return;
    GrayWalker<Elem> walker(basis, static_cast<Elem>(q));
    std::size_t local = std::numeric_limits<std::size_t>::max();
    walker.run(units[i], [&](std::size_t w) {
      if (w != 0 && w < local) local = w;
      return local > 1;
    });
    std::size_t cur = best.load();
    while (local < cur && !best.compare_exchange_weak(cur, local)) {
    }
  });
  return static_cast<std::int64_t>(best.load());
}

template <class Elem>
std::vector<std::uint64_t> weight_distribution_impl(const std::vector<std::vector<std::uint32_t>>& basis32,
                                                    std::uint64_t q, std::size_t length, unsigned threads) {
  const auto basis = convert_basis<Elem>(basis32);
  const auto units = search_units(q, basis.size());
  auto partial = parallel_map<std::vector<std::uint64_t>>(units.size(), threads, [&](std::size_t i) {
    std::vector<std::uint64_t> hist(length + 1, 0);
    GrayWalker<Elem> walker(basis, static_cast<Elem>(q));
    walker.run(units[i], [&](std::size_t w) {
      ++hist[w];
      return true;
    });
    return hist;
  });
  std::vector<std::uint64_t> out(length + 1, 0);
  for (const auto& h : partial)
    for (std::size_t w = 0; w <= length; ++w) out[w] += h[w];
  // each projective class stands for q - 1 nonzero codewords
  for (std::size_t w = 1; w <= length; ++w) out[w] *= (q - 1);
  out[0] = 1;
  return out;
}

// Admits a search when q^k / (q - 1) <= budget.
inline void check_budget(std::uint64_t q, std::size_t k, std::uint64_t budget) {
  unsigned __int128 power = 1;
  const unsigned __int128 cap = static_cast<unsigned __int128>(budget) * (q - 1);
  for (std::size_t i = 0; i < k && power <= cap; ++i) power *= q;
  if (power > cap) {
    const std::uint64_t need = projective_message_count(q, k);
    throw BudgetExceededError(need == std::numeric_limits<std::uint64_t>::max() ? need : need + 1, budget);
  }
}

}  // namespace detail

/// Exact minimum Hamming weight of a nonzero codeword of the row space of m.
inline std::int64_t min_distance_exhaustive(const GeneratorMatrix& m, SearchOptions opts = {}) {
  const auto basis = row_basis(m);
  if (basis.empty()) throw Error(ErrorKind::EmptyCode, "code has no nonzero codeword");
  const std::uint64_t q = m.field().q();
  detail::check_budget(q, basis.size(), opts.budget);
  if (q < 128) return detail::min_distance_impl<std::uint8_t>(basis, q, opts.threads);
  if (q < 32768) return detail::min_distance_impl<std::uint16_t>(basis, q, opts.threads);
  return detail::min_distance_impl<std::uint64_t>(basis, q, opts.threads);
}

/// A_w for w = 0..N over all codewords of the row space (A_0 = 1, sum = q^K).
inline std::vector<std::uint64_t> weight_distribution(const GeneratorMatrix& m, SearchOptions opts = {}) {
  const auto basis = row_basis(m);
  if (basis.empty()) {
    std::vector<std::uint64_t> out(m.cols() + 1, 0);
    out[0] = 1;
    return out;
  }
  const std::uint64_t q = m.field().q();
  detail::check_budget(q, basis.size(), opts.budget);
  if (q < 128) return detail::weight_distribution_impl<std::uint8_t>(basis, q, m.cols(), opts.threads);
  if (q < 32768) return detail::weight_distribution_impl<std::uint16_t>(basis, q, m.cols(), opts.threads);
  return detail::weight_distribution_impl<std::uint64_t>(basis, q, m.cols(), opts.threads);
}

}  // namespace wpt
