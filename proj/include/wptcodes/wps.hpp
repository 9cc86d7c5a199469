#pragma once

// Weighted projective space P(w0, ..., wn) over F_q and the numerical
// semigroup generated by its weights.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "wptcodes/error.hpp"
#include "wptcodes/gf.hpp"

namespace wpt {

class WeightedSpace {
 public:
  WeightedSpace(PrimeField field, std::vector<std::int64_t> weights)
      : field_(std::move(field)), weights_(std::move(weights)) {
    if (weights_.size() < 2) throw Error(ErrorKind::InvalidWeights, "need at least two weights");
    std::int64_t g = 0;
    for (auto w : weights_) {
      if (w < 1) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
      g = std::gcd(g, w);
    }
    if (g != 1) throw Error(ErrorKind::InvalidWeights, "weights must have gcd 1");
    const auto qm1 = static_cast<std::int64_t>(field_.group_order());
    orders_.reserve(weights_.size());
    reduced_.reserve(weights_.size());
    for (auto w : weights_) {
      const std::int64_t c = std::gcd(qm1, w);
      orders_.push_back(qm1 / c);
      reduced_.push_back(w / c);
    }
  }

  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t q() const noexcept { return field_.q(); }
  /// Number of weights minus one (the projective dimension).
  std::size_t n() const noexcept { return weights_.size() - 1; }

  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  std::int64_t weight(std::size_t i) const { return weights_.at(i); }

  /// d_i = (q-1)/gcd(q-1, w_i): the order of eta^{w_i}.
  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  std::int64_t order(std::size_t i) const { return orders_.at(i); }

  /// w_i / gcd(q-1, w_i).
  const std::vector<std::int64_t>& reduced_weights() const noexcept { return reduced_; }
  std::int64_t reduced_weight(std::size_t i) const { return reduced_.at(i); }

  bool leading_weight_divides_group_order() const noexcept {
    return static_cast<std::int64_t>(field_.group_order()) % weights_[0] == 0;
  }

  std::string describe() const {
    std::string s = "P(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(weights_[i]);
    }
    return s + ") over F_" + std::to_string(field_.q());
  }

 private:
  PrimeField field_;
  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> reduced_;
};

/// Number of exponent tuples m with sum m_i w_i = s, for every s in [0, max_degree].
inline std::vector<std::int64_t> graded_dimensions_upto(std::span<const std::int64_t> weights,
                                                        std::int64_t max_degree) {
  if (max_degree < 0) return {};
  std::vector<std::int64_t> ways(static_cast<std::size_t>(max_degree) + 1, 0);
  ways[0] = 1;
  for (auto w : weights) {
    for (std::int64_t s = w; s <= max_degree; ++s)
      ways[s] = detail::checked_add(ways[s], ways[s - w]);
  }
  return ways;
}

/// dim S_alpha: the number of monomials of weighted degree alpha. Zero for alpha < 0.
inline std::int64_t graded_dimension(std::span<const std::int64_t> weights, std::int64_t alpha) {
  if (alpha < 0) return 0;
  return graded_dimensions_upto(weights, alpha).back();
}

inline std::int64_t graded_dimension(const WeightedSpace& space, std::int64_t alpha) {
  return graded_dimension(space.weights(), alpha);
}

inline bool semigroup_contains(std::span<const std::int64_t> generators, std::int64_t alpha) {
  if (alpha < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(alpha) + 1, 0);
  reach[0] = 1;
  for (std::int64_t s = 1; s <= alpha; ++s)
    for (auto g : generators)
      if (g <= s && reach[s - g]) {
        reach[s] = 1;
        break;
      }
  return reach[alpha] != 0;
}

inline bool semigroup_contains(const WeightedSpace& space, std::int64_t alpha) {
  return semigroup_contains(space.weights(), alpha);
}

/// Largest integer outside the semigroup generated by `generators`; -1 when the
/// semigroup is all of N.
inline std::int64_t frobenius_number(std::span<const std::int64_t> generators) {
  std::int64_t g = 0;
  for (auto x : generators) {
    if (x < 1) throw Error(ErrorKind::InvalidWeights, "semigroup generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error(ErrorKind::NotCoprime, "generators have gcd " + std::to_string(g));
  const auto [lo, hi] = std::minmax_element(generators.begin(), generators.end());
  if (*lo == 1) return -1;
  // Schur: g(S) <= (min - 1)(max - 1) - 1 < min * max.
  const std::int64_t bound = detail::checked_mul(*lo, *hi);
  std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  std::int64_t largest_gap = -1;
  for (std::int64_t s = 1; s <= bound; ++s) {
    for (auto x : generators)
      if (x <= s && reach[s - x]) {
        reach[s] = 1;
        break;
      }
    if (!reach[s]) largest_gap = s;
  }
  return largest_gap;
}

inline std::int64_t frobenius_number(const WeightedSpace& space) { return frobenius_number(space.weights()); }

}  // namespace wpt
