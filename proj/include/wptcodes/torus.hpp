#pragma once

// F_q-rational points of the degenerate torus Y_Q = {[t0 : t1^w1 : ... : tn^wn]}
// and of the full torus T_X(F_q), as normalized tuples with leading coordinate 1.

#include <cstdint>
#include <vector>

#include "wptcodes/error.hpp"
#include "wptcodes/gf.hpp"
#include "wptcodes/wps.hpp"

namespace wpt {

struct Point {
  std::vector<FieldElem> coords;
  /// Discrete logarithms of coords to base eta, each in [0, q-2].
  std::vector<std::uint64_t> logs;

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

enum class PointSetKind { DegenerateTorusYQ, FullTorus };

class PointSet {
 public:
  PointSet(WeightedSpace space, PointSetKind kind, std::vector<Point> points)
      : space_(std::move(space)), kind_(kind), points_(std::move(points)) {}

  const WeightedSpace& space() const noexcept { return space_; }
  PointSetKind kind() const noexcept { return kind_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

 private:
  WeightedSpace space_;
  PointSetKind kind_;
  std::vector<Point> points_;
};

/// Enumeration refuses point sets larger than this.
inline constexpr std::uint64_t max_point_count = 1U << 24;

namespace detail {

inline void require_unit_leading_weight(const WeightedSpace& space) {
  if (space.weight(0) != 1)
    throw Error(ErrorKind::UnsupportedWeight, "normalized point enumeration requires w0 = 1, got " + space.describe());
}

// Mixed-radix walk over exponent tuples (i_1, ..., i_n), i_1 slowest; the point
// coordinate j is eta^(step_j * i_j).
inline std::vector<Point> enumerate_lattice(const WeightedSpace& space, const std::vector<std::int64_t>& radix,
                                            const std::vector<std::int64_t>& step) {
  const auto& field = space.field();
  const std::size_t n = space.n();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    total *= static_cast<std::uint64_t>(radix[j]);
    if (total > max_point_count) throw Error(ErrorKind::TooLarge, "point set too large: " + space.describe());
  }
  const auto qm1 = static_cast<std::int64_t>(field.group_order());
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::int64_t> idx(n, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    Point p;
    p.coords.reserve(n + 1);
    p.logs.reserve(n + 1);
    p.coords.push_back(field.one());
    p.logs.push_back(0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t e = (step[j] % qm1) * idx[j] % qm1;
      p.coords.push_back(field.eta_pow(e));
      p.logs.push_back(static_cast<std::uint64_t>(e));
    }
    out.push_back(std::move(p));
    for (std::size_t j = n; j-- > 0;) {
      if (++idx[j] < radix[j]) break;
      idx[j] = 0;
    }
  }
  return out;
}

}  // namespace detail

/// Points [1 : eta_1^{i_1} : ... : eta_n^{i_n}] with eta_j = eta^{w_j}, 0 <= i_j < d_j,
/// in lexicographic order of (i_1, ..., i_n).
inline PointSet enumerate_YQ(const WeightedSpace& space) {
  detail::require_unit_leading_weight(space);
  std::vector<std::int64_t> radix(space.orders().begin() + 1, space.orders().end());
  std::vector<std::int64_t> step(space.weights().begin() + 1, space.weights().end());
  return PointSet(space, PointSetKind::DegenerateTorusYQ, detail::enumerate_lattice(space, radix, step));
}

/// All (q-1)^n points [1 : t_1 : ... : t_n], lexicographic in the discrete logs of t_j.
inline PointSet enumerate_full_torus(const WeightedSpace& space) {
  detail::require_unit_leading_weight(space);
  const auto qm1 = static_cast<std::int64_t>(space.field().group_order());
  std::vector<std::int64_t> radix(space.n(), qm1);
  std::vector<std::int64_t> step(space.n(), 1);
  return PointSet(space, PointSetKind::FullTorus, detail::enumerate_lattice(space, radix, step));
}

}  // namespace wpt
