#pragma once

// Binomial generators of the vanishing ideal I(Y_Q) and the mixed-dominating
// matrix test that certifies it is a complete intersection.

#include <cstdint>
#include <string>
#include <vector>

#include "wptcodes/error.hpp"
#include "wptcodes/monomial.hpp"
#include "wptcodes/torus.hpp"
#include "wptcodes/wps.hpp"

namespace wpt {

struct Binomial {
  Monomial lead;
  Monomial trail;

  bool homogeneous() const noexcept { return lead.weighted_degree == trail.weighted_degree; }
};

inline std::string to_string(const Binomial& b) { return to_string(b.lead) + " - " + to_string(b.trail); }

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::PreconditionFailed, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

namespace detail {

inline void require_w0_divides(const WeightedSpace& space) {
  if (!space.leading_weight_divides_group_order())
    throw Error(ErrorKind::PreconditionFailed, "w0 must divide q-1 for " + space.describe());
}

// Columns `cols` restricted to rows `rows` all carry both signs.
inline bool submatrix_mixed(const IntMatrix& m, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  for (auto c : cols) {
    bool pos = false, neg = false;
    for (auto r : rows) {
      pos = pos || m(r, c) > 0;
      neg = neg || m(r, c) < 0;
    }
    if (!(pos && neg)) return false;
  }
  return true;
}

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// F_i = x_i^{d_i} - x_0^{d_0 * wtilde_i}, i = 1..n.
inline std::vector<Binomial> vanishing_ideal_generators(const WeightedSpace& space) {
  detail::require_w0_divides(space);
  const std::size_t vars = space.n() + 1;
  std::vector<Binomial> gens;
  for (std::size_t i = 1; i < vars; ++i) {
    std::vector<std::int64_t> lead(vars, 0), trail(vars, 0);
    lead[i] = space.order(i);
    trail[0] = detail::checked_mul(space.order(0), space.reduced_weight(i));
    gens.push_back({Monomial(lead, space.weights()), Monomial(trail, space.weights())});
  }
  return gens;
}

/// True iff every binomial evaluates to zero at every point.
inline bool verify_vanishing(const std::vector<Binomial>& gens, const PointSet& pts) {
  const auto& field = pts.space().field();
  for (const auto& g : gens)
    for (const auto& p : pts)
      if (g.lead.evaluate(field, p.coords) != g.trail.evaluate(field, p.coords)) return false;
  return true;
}

/// Every column has a positive and a negative entry.
inline bool is_mixed(const IntMatrix& m) {
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return detail::submatrix_mixed(m, rows, cols);
}

inline constexpr std::uint64_t default_dominating_budget = 1U << 20;

/// No square submatrix is mixed. Exhaustive over row/column subsets.
inline bool is_dominating(const IntMatrix& m, std::uint64_t budget = default_dominating_budget) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  std::uint64_t pairs = 0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    const auto a = detail::binomial_saturating(m.rows(), k);
    const auto b = detail::binomial_saturating(m.cols(), k);
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    if (prod > budget || pairs + prod > budget)
      throw Error(ErrorKind::TooLarge, "dominating check exceeds subset budget of " + std::to_string(budget));
    pairs += static_cast<std::uint64_t>(prod);
  }
  for (std::size_t k = 1; k <= kmax; ++k) {
    const auto row_sets = detail::subsets_of_size(m.rows(), k);
    const auto col_sets = detail::subsets_of_size(m.cols(), k);
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets)
        if (detail::submatrix_mixed(m, rs, cs)) return false;
  }
  return true;
}

/// (n+1) x n matrix with columns (-wtilde_i, e_i): a basis of the lattice whose
/// ideal, after x_i -> x_i^{d_i}, is I(Y_Q).
inline IntMatrix lattice_basis_YQ(const WeightedSpace& space) {
  detail::require_w0_divides(space);
  const std::size_t n = space.n();
  IntMatrix m(n + 1, n);
  for (std::size_t i = 1; i <= n; ++i) {
    m(0, i - 1) = -space.reduced_weight(i);
    m(i, i - 1) = 1;
  }
  return m;
}

}  // namespace wpt
