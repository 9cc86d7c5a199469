#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace wpt {

enum class ErrorKind {
  NotPrime,
  ZeroInverse,
  ZeroElement,
  InvalidWeights,
  NotCoprime,
  UnsupportedWeight,
  PreconditionFailed,
  TooLarge,
  BudgetExceeded,
  EmptyCode,
  OutOfRange,
  Overflow,
  Parse,
  Io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptyCode: return "EmptyCode";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the exhaustive searches when the message count is over budget.
/// `required()` saturates at UINT64_MAX.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t required, std::uint64_t budget)
      : Error(ErrorKind::BudgetExceeded,
              "exhaustive search needs " +
                  (required == std::numeric_limits<std::uint64_t>::max() ? std::string(">2^64")
                                                                         : std::to_string(required)) +
                  " messages, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

// Floor division for a possibly negative numerator and a positive divisor.
inline std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace detail
}  // namespace wpt
