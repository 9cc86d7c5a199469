#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wptcodes/error.hpp"
#include "wptcodes/gf.hpp"
#include "wptcodes/torus.hpp"

namespace wpt {

/// x0^m0 x1^m1 ... xn^mn together with its weighted degree.
struct Monomial {
  std::vector<std::int64_t> exponents;
  std::int64_t weighted_degree = 0;

  Monomial() = default;
  Monomial(std::vector<std::int64_t> exps, std::span<const std::int64_t> weights) : exponents(std::move(exps)) {
    if (exponents.size() != weights.size())
      throw Error(ErrorKind::PreconditionFailed, "monomial has wrong number of variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0) throw Error(ErrorKind::PreconditionFailed, "negative exponent");
      weighted_degree = detail::checked_add(weighted_degree, detail::checked_mul(exponents[i], weights[i]));
    }
  }

  /// Direct evaluation by repeated squaring in the field.
  FieldElem evaluate(const PrimeField& field, std::span<const FieldElem> coords) const {
    FieldElem acc = field.one();
    for (std::size_t i = 0; i < exponents.size(); ++i) acc = field.mul(acc, field.pow(coords[i], exponents[i]));
    return acc;
  }

  /// Evaluation through discrete logs; valid only at points of the torus.
  FieldElem evaluate_log(const PrimeField& field, const Point& p) const {
    const std::uint64_t m = field.group_order();
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      e = (e + detail::mulmod(static_cast<std::uint64_t>(exponents[i]) % m, p.logs[i], m)) % m;
    return field.eta_pow(static_cast<std::int64_t>(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
};

inline std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m.exponents[i] != 1) s += "^" + std::to_string(m.exponents[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace wpt
