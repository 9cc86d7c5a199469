#pragma once

// Hilbert function of S/I(Y_Q) via the Koszul resolution of the complete
// intersection <F_1, ..., F_n>, and the associated a-invariants.

#include <cstdint>
#include <map>
#include <vector>

#include "wptcodes/error.hpp"
#include "wptcodes/ideal.hpp"
#include "wptcodes/wps.hpp"

namespace wpt {

/// Degrees d_i * w_i of the generators F_1..F_n.
inline std::vector<std::int64_t> generator_degrees(const WeightedSpace& space) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i <= space.n(); ++i) out.push_back(detail::checked_mul(space.order(i), space.weight(i)));
  return out;
}

/// H_{Y_Q}(alpha) = sum over I in [n] of (-1)^{|I|} dim S_{alpha - alpha_I}.
/// Returns 0 outside the semigroup generated by the weights.
inline std::int64_t hilbert_YQ(const WeightedSpace& space, std::int64_t alpha) {
  detail::require_w0_divides(space);
  if (!semigroup_contains(space, alpha)) return 0;
  const auto degs = generator_degrees(space);
  const auto dims = graded_dimensions_upto(space.weights(), alpha);
  const std::size_t n = degs.size();
  if (n >= 63) throw Error(ErrorKind::TooLarge, "too many generators for inclusion-exclusion");
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t shift = 0;
    int parity = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) {
        shift = detail::checked_add(shift, degs[i]);
        parity ^= 1;
      }
    if (shift > alpha) continue;
    const std::int64_t term = dims[static_cast<std::size_t>(alpha - shift)];
    total = parity ? detail::checked_add(total, -term) : detail::checked_add(total, term);
  }
  return total;
}

/// Coefficients of the Hilbert series numerator prod_i (1 - t^{alpha_i}), keyed by degree.
inline std::map<std::int64_t, std::int64_t> hilbert_numerator(const WeightedSpace& space) {
  detail::require_w0_divides(space);
  std::map<std::int64_t, std::int64_t> poly{{0, 1}};
  for (auto deg : generator_degrees(space)) {
    std::map<std::int64_t, std::int64_t> next = poly;
    for (const auto& [e, c] : poly) next[e + deg] -= c;
    poly.clear();
    for (const auto& [e, c] : next)
      if (c != 0) poly.emplace(e, c);
  }
  return poly;
}

/// a_{Y_Q} = sum_{i>=1} (d_i - 1) w_i - w0.
inline std::int64_t a_invariant_YQ(const WeightedSpace& space) {
  detail::require_w0_divides(space);
  std::int64_t a = -space.weight(0);
  for (std::size_t i = 1; i <= space.n(); ++i)
    a = detail::checked_add(a, detail::checked_mul(space.order(i) - 1, space.weight(i)));
  return a;
}

/// alpha lies in reg(Y_Q) = 1 + a_Y + N (intersected with the weight semigroup).
inline bool in_regularity(const WeightedSpace& space, std::int64_t alpha) {
  return alpha >= a_invariant_YQ(space) + 1 && semigroup_contains(space, alpha);
}

/// The regularity law reg(Y) = 1 + a_Y + N is only established for w0 = 1;
/// for 1 < w0 | q-1 in_regularity is evaluated but unproven.
inline bool regularity_law_established(const WeightedSpace& space) { return space.weight(0) == 1; }

/// a-invariant of the full torus: (q-2)[w0 + ... + wn + g] + g with g the Frobenius number.
inline std::int64_t a_invariant_full_torus(const WeightedSpace& space) {
  const std::int64_t g = frobenius_number(space);
  std::int64_t sum = g;
  for (auto w : space.weights()) sum = detail::checked_add(sum, w);
  return detail::checked_add(detail::checked_mul(static_cast<std::int64_t>(space.q()) - 2, sum), g);
}

}  // namespace wpt
