#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmzv/arith/rational.hpp"

namespace pmzv {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-precision element of Q_p: p^valuation * unit + O(p^(valuation + rel)).
//
// A value indistinguishable from zero is a separate state carrying only the
// bound O(p^N). Precision follows the interval rules: sums keep the smaller
// absolute precision, products the smaller relative precision. Nothing is
// ever recovered automatically.
class Padic {
 public:
  // Absolute precision of exact zeros (e.g. an accumulator's initial value).
  static constexpr long kExact = std::numeric_limits<long>::max() / 8;

  Padic() = default;

  static Padic zero(long p, long absolute_precision = kExact);
  static Padic from_integer(const Integer& n, long p, long relative_precision);
  static Padic from_rational_relative(const Rational& q, long p, long relative_precision);
  // Image of q known at least modulo p^absolute_precision.
  static Padic from_rational(const Rational& q, long p, long absolute_precision);
  // p^valuation * unit, unit taken modulo p^relative_precision.
  static Padic from_parts(long p, long valuation, const Integer& unit, long relative_precision);

  long prime() const { return prime_; }
  bool is_zero() const { return zero_; }
  // Meaningless (returns the bound) when is_zero().
  long valuation() const { return zero_ ? abs_ : valuation_; }
  long relative_precision() const { return zero_ ? 0 : rel_; }
  long absolute_precision() const { return zero_ ? abs_ : valuation_ + rel_; }
  const Integer& unit() const { return unit_; }

  // Little-endian base-p digits of the unit, relative_precision() of them.
  std::vector<long> unit_digits() const;

  // Same value with absolute precision lowered to at most n.
  Padic truncated(long absolute_precision) const;

  Padic inverse() const;

  // v_p(x - y), capped by the common absolute precision.
  long agreement(const Padic& other) const;

  // Renders "5^-1 * (1 + 2*5 + 4*5^3) + O(5^3)" style text.
  std::string to_string() const;

  friend Padic operator+(const Padic& x, const Padic& y);
  friend Padic operator-(const Padic& x, const Padic& y);
  friend Padic operator*(const Padic& x, const Padic& y);
  friend Padic operator/(const Padic& x, const Padic& y);
  Padic operator-() const;

  Padic& operator+=(const Padic& y) { return *this = *this + y; }
  Padic& operator-=(const Padic& y) { return *this = *this - y; }
  Padic& operator*=(const Padic& y) { return *this = *this * y; }

  // Equal iff the values agree modulo p^(min of the absolute precisions).
  friend bool operator==(const Padic& x, const Padic& y);

 private:
  static Padic normalized(long p, long valuation, Integer unit, long relative_precision);
  void check_prime(const Padic& other) const;

  long prime_ = 0;
  bool zero_ = true;
  long valuation_ = 0;
  long rel_ = 0;
  long abs_ = kExact;
  Integer unit_ = 0;
};

// Cached p^k for the calling thread.
const Integer& prime_power(long p, long k);

}  // namespace pmzv
