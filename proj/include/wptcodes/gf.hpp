#pragma once

// Arithmetic in a prime field F_q with a fixed primitive root.

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wptcodes/error.hpp"

namespace wpt {

struct FieldElem {
  std::uint64_t value = 0;

  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace detail

class PrimeField {
 public:
  /// Largest supported modulus; matrices store residues as 32-bit values.
  static constexpr std::uint64_t max_modulus = std::numeric_limits<std::uint32_t>::max();

  explicit PrimeField(std::uint64_t q) : q_(q) {
    if (!detail::is_prime(q)) throw Error(ErrorKind::NotPrime, "q must be prime (got " + std::to_string(q) + ")");
    if (q > max_modulus) throw Error(ErrorKind::OutOfRange, "q must be below 2^32");
    factors_ = detail::prime_factors(q - 1);
    eta_ = smallest_primitive_root();
  }

  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t group_order() const noexcept { return q_ - 1; }
  FieldElem eta() const noexcept { return {eta_}; }
  /// Distinct primes dividing q - 1.
  const std::vector<std::uint64_t>& group_order_factors() const noexcept { return factors_; }

  FieldElem elem(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(q_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return {static_cast<std::uint64_t>(r)};
  }
  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1 % q_}; }

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    std::uint64_t s = a.value + b.value;
    return {s >= q_ ? s - q_ : s};
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
  }
  FieldElem neg(FieldElem a) const noexcept { return {a.value == 0 ? 0 : q_ - a.value}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept { return {detail::mulmod(a.value, b.value, q_)}; }

  FieldElem inv(FieldElem a) const {
    if (a.value == 0) throw Error(ErrorKind::ZeroInverse, "zero has no inverse");
    return {detail::powmod(a.value, q_ - 2, q_)};
  }

  /// x^e by square-and-multiply; negative e inverts first.
  FieldElem pow(FieldElem x, std::int64_t e) const {
    if (e < 0) {
      if (x.value == 0) throw Error(ErrorKind::ZeroInverse, "zero raised to a negative power");
      x = inv(x);
      // -(e + 1) + 1 avoids negating INT64_MIN
      return mul(x, pow(x, -(e + 1)));
    }
    return {detail::powmod(x.value, static_cast<std::uint64_t>(e), q_)};
  }

  /// eta^e with the exponent reduced modulo q - 1.
  FieldElem eta_pow(std::int64_t e) const {
    auto m = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = e % m;
    if (r < 0) r += m;
    return {detail::powmod(eta_, static_cast<std::uint64_t>(r), q_)};
  }

  /// Multiplicative order of a nonzero element; always divides q - 1.
  std::uint64_t element_order(FieldElem x) const {
    if (x.value % q_ == 0) throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
    std::uint64_t order = q_ - 1;
    for (std::uint64_t p : factors_) {
      while (order % p == 0 && detail::powmod(x.value, order / p, q_) == 1) order /= p;
    }
    return order;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.q_ == b.q_; }

 private:
  std::uint64_t smallest_primitive_root() const {
    if (q_ == 2) return 1;
    for (std::uint64_t g = 2; g < q_; ++g) {
      bool generator = true;
      for (std::uint64_t p : factors_) {
        if (detail::powmod(g, (q_ - 1) / p, q_) == 1) {
          generator = false;
          break;
        }
      }
      if (generator) return g;
    }
    return 1;  // unreachable for prime q
  }

  std::uint64_t q_;
  std::uint64_t eta_ = 1;
  std::vector<std::uint64_t> factors_;
};

inline PrimeField make_field(std::uint64_t q) { return PrimeField(q); }

inline FieldElem pow(const PrimeField& field, FieldElem x, std::int64_t e) { return field.pow(x, e); }

inline std::uint64_t element_order(const PrimeField& field, FieldElem x) { return field.element_order(x); }

}  // namespace wpt
