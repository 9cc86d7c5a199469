#pragma once

// Closed-form parameters of C_{alpha,Y_Q}:
//   * the nested-sum dimension on P(1, w1, ..., wn),
//   * piecewise dimension and minimum distance on P(1, 1, a),
//   * exact regimes and upper bounds for the distance on P(1, w1, w2),
//   * the extremal codewords that attain the P(1, 1, a) distance.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "wptcodes/code.hpp"
#include "wptcodes/error.hpp"
#include "wptcodes/torus.hpp"
#include "wptcodes/wps.hpp"

namespace wpt {

/// Sum over m_n, ..., m_1 with 0 <= m_i <= min(floor(rest / w_i), d_i - 1), where
/// rest is alpha minus the weight already used by m_n..m_{i+1}. Requires w0 = 1.
inline std::int64_t dimension_nested_sum(const WeightedSpace& space, std::int64_t alpha) {
  if (space.weight(0) != 1)
    throw Error(ErrorKind::UnsupportedWeight, "nested-sum dimension needs w0 = 1, got " + space.describe());
  if (alpha < 0) return 0;
  auto descend = [&](auto&& self, std::size_t i, std::int64_t rest) -> std::int64_t {
    if (i == 0) return 1;  // m0 = rest is forced
    const std::int64_t top = std::min(rest / space.weight(i), space.order(i) - 1);
    std::int64_t total = 0;
    for (std::int64_t m = 0; m <= top; ++m) total = detail::checked_add(total, self(self, i - 1, rest - m * space.weight(i)));
    return total;
  };
  return descend(descend, space.n(), alpha);
}

/// Quantities for weights (1, 1, a).
struct P11aContext {
  std::int64_t q = 0;
  std::int64_t a = 0;
  std::int64_t d2 = 0;
  std::int64_t alpha = 0;
  /// floor((alpha - (q-2)) / a); present only when alpha >= q - 2.
  std::optional<std::int64_t> k;
  /// min(floor(alpha / a), d2 - 1)
  std::int64_t mu2 = 0;

  std::int64_t length() const { return (q - 1) * d2; }
  /// (q-2) + (d2-1)a, where the code becomes trivial.
  std::int64_t trivial_from() const { return (q - 2) + (d2 - 1) * a; }
};

inline bool is_P11a(const WeightedSpace& space) {
  return space.n() == 2 && space.weight(0) == 1 && space.weight(1) == 1;
}

inline P11aContext make_P11a_context(const WeightedSpace& space, std::int64_t alpha) {
  if (!is_P11a(space)) throw Error(ErrorKind::PreconditionFailed, "expected weights (1,1,a), got " + space.describe());
  if (alpha < 0) throw Error(ErrorKind::OutOfRange, "alpha must be nonnegative");
  P11aContext ctx;
  ctx.q = static_cast<std::int64_t>(space.q());
  ctx.a = space.weight(2);
  ctx.d2 = space.order(2);
  ctx.alpha = alpha;
  if (alpha >= ctx.q - 2) ctx.k = (alpha - (ctx.q - 2)) / ctx.a;
  ctx.mu2 = std::min(alpha / ctx.a, ctx.d2 - 1);
  return ctx;
}

namespace detail {

// (mu2+1)(alpha+1 - mu2 a/2), evaluated on doubled values to stay integral.
inline std::int64_t p11a_dimension_low(const P11aContext& c) {
  const std::int64_t twice = (c.mu2 + 1) * (2 * (c.alpha + 1) - c.mu2 * c.a);
  return twice / 2;
}

// (q-1)(k+1) + (mu2-k)[alpha+1 - (mu2+k+1)a/2] for a given k.
inline std::int64_t p11a_dimension_mid(const P11aContext& c, std::int64_t k) {
  const std::int64_t twice_tail = (c.mu2 - k) * (2 * (c.alpha + 1) - (c.mu2 + k + 1) * c.a);
  return (c.q - 1) * (k + 1) + twice_tail / 2;
}

}  // namespace detail

/// Piecewise dimension on P(1,1,a); branches tried in order, first match wins.
inline std::int64_t dimension_P11a(const P11aContext& c) {
  if (c.alpha <= c.q - 2) {
    const std::int64_t low = detail::p11a_dimension_low(c);
    // both branches agree where they meet
    assert(c.alpha != c.q - 2 || low == detail::p11a_dimension_mid(c, 0));
    return low;
  }
  const std::int64_t excess = c.alpha - (c.q - 2);
  if (excess > 0 && excess < (c.d2 - 1) * c.a) return detail::p11a_dimension_mid(c, *c.k);
  return c.length();
}

/// Piecewise minimum distance on P(1,1,a).
inline std::int64_t distance_P11a(const P11aContext& c) {
  if (c.alpha <= c.q - 2) {
    const std::int64_t low = c.d2 * (c.q - 1 - c.alpha);
    assert(c.alpha != c.q - 2 || low == c.d2 - *c.k);
    return low;
  }
  if (c.alpha < c.trivial_from()) return c.d2 - *c.k;
  return 1;
}

/// Quantities for weights (1, w1, w2).
struct P1w1w2Context {
  std::int64_t q = 0;
  std::int64_t w1 = 0;
  std::int64_t w2 = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t alpha = 0;
  /// floor((alpha - w1(d1-1)) / w2), possibly negative.
  std::int64_t k = 0;
  /// min(floor(alpha / w2), d2 - 1)
  std::int64_t mu2 = 0;
  /// Same quantity as k; the cut-off below which x_1 saturates at d1 - 1.
  std::int64_t mu2prime = 0;

  std::int64_t length() const { return d1 * d2; }
  std::int64_t middle_from() const { return w1 * (d1 - 1); }
  std::int64_t trivial_from() const { return w1 * (d1 - 1) + w2 * (d2 - 1); }
};

inline P1w1w2Context make_P1w1w2_context(const WeightedSpace& space, std::int64_t alpha) {
  if (space.n() != 2 || space.weight(0) != 1)
    throw Error(ErrorKind::PreconditionFailed, "expected weights (1,w1,w2), got " + space.describe());
  if (alpha < 0) throw Error(ErrorKind::OutOfRange, "alpha must be nonnegative");
  P1w1w2Context c;
  c.q = static_cast<std::int64_t>(space.q());
  c.w1 = space.weight(1);
  c.w2 = space.weight(2);
  c.d1 = space.order(1);
  c.d2 = space.order(2);
  c.alpha = alpha;
  c.k = detail::floor_div(alpha - c.w1 * (c.d1 - 1), c.w2);
  c.mu2 = std::min(alpha / c.w2, c.d2 - 1);
  c.mu2prime = c.k;
  return c;
}

/// u(y) = d1 y + (d2 - y) min(floor((alpha - y w2)/w1), d1 - 1), for 0 <= y <= mu2.
inline std::int64_t envelope_u(const P1w1w2Context& c, std::int64_t y) {
  if (y < 0 || y > c.mu2) throw Error(ErrorKind::OutOfRange, "y must lie in [0, mu2]");
  return c.d1 * y + (c.d2 - y) * std::min((c.alpha - y * c.w2) / c.w1, c.d1 - 1);
}

enum class DistanceRegime { Middle, Trivial, BoundOnly };

inline const char* to_string(DistanceRegime r) {
  switch (r) {
    case DistanceRegime::Middle: return "middle";
    case DistanceRegime::Trivial: return "trivial";
    case DistanceRegime::BoundOnly: return "bound";
  }
  return "?";
}

struct DistanceBound {
  DistanceRegime regime = DistanceRegime::BoundOnly;
  /// Exact distance when `exact`, otherwise an upper bound.
  std::int64_t value = 0;
  bool exact = false;
  /// u(0..mu2) and its maximum; max u bounds the zero count of any nonzero codeword.
  std::vector<std::int64_t> envelope;
  std::int64_t envelope_max = 0;
  std::int64_t envelope_argmax = 0;
};

inline DistanceBound distance_bounds_P1w1w2(const P1w1w2Context& c) {
  DistanceBound out;
  for (std::int64_t y = 0; y <= c.mu2; ++y) out.envelope.push_back(envelope_u(c, y));
  const auto it = std::max_element(out.envelope.begin(), out.envelope.end());
  out.envelope_max = *it;
  out.envelope_argmax = it - out.envelope.begin();
  if (c.alpha >= c.trivial_from()) {
    out.regime = DistanceRegime::Trivial;
    out.value = 1;
    out.exact = true;
  } else if (c.alpha >= c.middle_from()) {
    // x0^r (x1 - eta_1 x0)...(x1 - eta_1^{d1-1} x0) (x2 - eta_2 x0^{w2})...(x2 - eta_2^k x0^{w2})
    // always has weight d2 - k. Equality fails for some w1 > w2, e.g. P(1,2,1) over F_5
    // at alpha = 3 is P(1,1,2) with coordinates swapped and has distance 2, not 3.
    out.regime = DistanceRegime::Middle;
    out.value = c.d2 - c.k;
    out.exact = c.w1 <= c.w2;
  } else {
    out.regime = DistanceRegime::BoundOnly;
    out.value = c.d2 * (c.d1 - c.alpha / c.w1);
  }
  return out;
}

/// N + 1 - K - delta.
inline std::int64_t singleton_defect(const CodeSummary& s) {
  if (!s.distance) throw Error(ErrorKind::PreconditionFailed, "singleton defect needs a distance");
  return s.length + 1 - s.dimension - *s.distance;
}

/// Evaluation at Y_Q of the degree-alpha polynomial that attains distance_P11a:
///   alpha <= q-2:  prod_{i=1}^{alpha} (x1 - eta^i x0)
///   otherwise:     x0^r prod_{i=1}^{q-2} (x1 - eta^i x0) prod_{j=1}^{k} (x2 - eta_2^j x0^a)
/// with alpha - (q-2) = k a + r. Empty once the code is trivial.
inline std::optional<std::vector<std::uint32_t>> extremal_codeword_P11a(const WeightedSpace& space,
                                                                        std::int64_t alpha, const PointSet& pts) {
  const auto c = make_P11a_context(space, alpha);
  if (alpha >= c.trivial_from() && alpha > c.q - 2) return std::nullopt;
  const auto& f = space.field();
  const FieldElem eta1 = f.eta_pow(space.weight(1));
  const FieldElem eta2 = f.eta_pow(space.weight(2));
  std::int64_t linear = alpha, quadric = 0, x0pow = 0;
  if (alpha > c.q - 2) {
    linear = c.q - 2;
    quadric = *c.k;
    x0pow = alpha - (c.q - 2) - quadric * c.a;
  }
  std::vector<std::uint32_t> word;
  word.reserve(pts.size());
  for (const auto& p : pts) {
    const auto& x = p.coords;
    FieldElem v = f.pow(x[0], x0pow);
    for (std::int64_t i = 1; i <= linear; ++i) v = f.mul(v, f.sub(x[1], f.mul(f.pow(eta1, i), x[0])));
    for (std::int64_t j = 1; j <= quadric; ++j)
      v = f.mul(v, f.sub(x[2], f.mul(f.pow(eta2, j), f.pow(x[0], c.a))));
    word.push_back(static_cast<std::uint32_t>(v.value));
  }
  return word;
}

}  // namespace wpt
