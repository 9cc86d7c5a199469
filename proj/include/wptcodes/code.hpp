#pragma once

// Evaluation codes C_{alpha,Y}: standard-monomial bases, generator matrices and
// rank over F_q.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wptcodes/error.hpp"
#include "wptcodes/gf.hpp"
#include "wptcodes/monomial.hpp"
#include "wptcodes/torus.hpp"
#include "wptcodes/wps.hpp"

namespace wpt {

namespace detail {

// Appends every exponent tuple of weighted degree `alpha` to `out`, with
// optional caps on m_1..m_n; iteration is lexicographic in (m_n, ..., m_1).
inline void collect_monomials(const WeightedSpace& space, std::int64_t alpha,
                              const std::vector<std::int64_t>* caps, std::vector<Monomial>& out) {
  const auto& w = space.weights();
  const std::size_t vars = w.size();
  std::vector<std::int64_t> m(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t rest) -> void {
    if (i == 0) {
      if (rest % w[0] != 0) return;
      m[0] = rest / w[0];
      out.emplace_back(m, w);
      return;
    }
    std::int64_t hi = rest / w[i];
    if (caps) hi = std::min(hi, (*caps)[i] - 1);
    for (std::int64_t e = 0; e <= hi; ++e) {
      m[i] = e;
      self(self, i - 1, rest - e * w[i]);
    }
    m[i] = 0;
  };
  if (alpha >= 0) rec(rec, vars - 1, alpha);
}

}  // namespace detail

/// Degree-alpha monomials not divisible by any x_i^{d_i} (i >= 1), ordered
/// lexicographically by (m_n, ..., m_1). They index a basis of S_alpha / I_alpha(Y_Q).
inline std::vector<Monomial> standard_monomials(const WeightedSpace& space, std::int64_t alpha) {
  if (space.weight(0) != 1)
    throw Error(ErrorKind::UnsupportedWeight, "standard monomials require w0 = 1, got " + space.describe());
  std::vector<Monomial> out;
  detail::collect_monomials(space, alpha, &space.orders(), out);
  return out;
}

/// Every monomial of weighted degree alpha, same ordering as standard_monomials.
inline std::vector<Monomial> all_monomials(const WeightedSpace& space, std::int64_t alpha) {
  std::vector<Monomial> out;
  detail::collect_monomials(space, alpha, nullptr, out);
  return out;
}

class GeneratorMatrix {
 public:
  GeneratorMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries,
                  std::vector<Monomial> row_monomials = {}, std::shared_ptr<const PointSet> column_points = nullptr)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        entries_(std::move(entries)),
        row_monomials_(std::move(row_monomials)),
        column_points_(std::move(column_points)) {
    if (entries_.size() != rows_ * cols_) throw Error(ErrorKind::PreconditionFailed, "matrix entry count mismatch");
    for (auto v : entries_)
      if (v >= field_.q()) throw Error(ErrorKind::PreconditionFailed, "matrix entry not reduced mod q");
    if (!row_monomials_.empty() && row_monomials_.size() != rows_)
      throw Error(ErrorKind::PreconditionFailed, "row monomial count mismatch");
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }
  const std::vector<Monomial>& row_monomials() const noexcept { return row_monomials_; }
  /// Null for matrices not built from a point set (e.g. imported ones).
  const std::shared_ptr<const PointSet>& column_points() const noexcept { return column_points_; }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> entries_;
  std::vector<Monomial> row_monomials_;
  std::shared_ptr<const PointSet> column_points_;
};

/// Rows are the given monomials evaluated at the points (via discrete logs).
inline GeneratorMatrix evaluation_matrix(const std::vector<Monomial>& monomials, const PointSet& pts) {
  const auto& field = pts.space().field();
  std::vector<std::uint32_t> entries;
  entries.reserve(monomials.size() * pts.size());
  for (const auto& m : monomials)
    for (const auto& p : pts) entries.push_back(static_cast<std::uint32_t>(m.evaluate_log(field, p).value));
  return GeneratorMatrix(field, monomials.size(), pts.size(), std::move(entries), monomials,
                         std::make_shared<const PointSet>(pts));
}

/// Generator matrix of C_{alpha,Y_Q}: standard monomials of degree alpha evaluated at pts.
inline GeneratorMatrix generator_matrix(const WeightedSpace& space, std::int64_t alpha, const PointSet& pts) {
  if (pts.space().weights() != space.weights() || pts.space().q() != space.q())
    throw Error(ErrorKind::PreconditionFailed, "point set belongs to a different space");
  return evaluation_matrix(standard_monomials(space, alpha), pts);
}

/// Reduced row echelon basis of the row space (rank rows).
inline std::vector<std::vector<std::uint32_t>> row_basis(const GeneratorMatrix& m) {
  const std::uint64_t q = m.field().q();
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    const std::uint64_t inv = m.field().inv({a[rank][c]}).value;
    for (auto& v : a[rank]) v = detail::mulmod(v, inv, q);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c];
      for (std::size_t k = c; k < m.cols(); ++k) {
        const std::uint64_t sub = detail::mulmod(f, a[rank][k], q);
        a[r][k] = a[r][k] >= sub ? a[r][k] - sub : a[r][k] + q - sub;
      }
    }
    ++rank;
  }
  std::vector<std::vector<std::uint32_t>> out(rank);
  for (std::size_t r = 0; r < rank; ++r) out[r].assign(a[r].begin(), a[r].end());
  return out;
}

/// Rank over F_q by Gaussian elimination.
inline std::size_t rank(const GeneratorMatrix& m) { return row_basis(m).size(); }

/// True iff `word` lies in the row space of m.
inline bool in_row_space(const GeneratorMatrix& m, std::span<const std::uint32_t> word) {
  if (word.size() != m.cols()) throw Error(ErrorKind::PreconditionFailed, "word length mismatch");
  std::vector<std::uint32_t> entries = m.entries();
  entries.insert(entries.end(), word.begin(), word.end());
  GeneratorMatrix ext(m.field(), m.rows() + 1, m.cols(), std::move(entries));
  return rank(ext) == rank(m);
}

inline std::size_t hamming_weight(std::span<const std::uint32_t> word) {
  std::size_t w = 0;
  for (auto v : word) w += v != 0;
  return w;
}

enum class Provenance { Formula, MatrixRank, Exhaustive, BoundOnly };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Formula: return "Formula";
    case Provenance::MatrixRank: return "MatrixRank";
    case Provenance::Exhaustive: return "Exhaustive";
    case Provenance::BoundOnly: return "BoundOnly";
  }
  return "?";
}

/// [N, K, delta] with where each number came from. With BoundOnly, delta is an upper bound.
struct CodeSummary {
  std::int64_t alpha = 0;
  std::int64_t length = 0;
  std::int64_t dimension = 0;
  std::optional<std::int64_t> distance;
  Provenance length_from = Provenance::Formula;
  Provenance dimension_from = Provenance::Formula;
  Provenance distance_from = Provenance::Formula;

  std::string bracket() const {
    std::string d = "?";
    if (distance) d = (distance_from == Provenance::BoundOnly ? "<=" : "") + std::to_string(*distance);
    return "[" + std::to_string(length) + "," + std::to_string(dimension) + "," + d + "]";
  }
};

}  // namespace wpt
