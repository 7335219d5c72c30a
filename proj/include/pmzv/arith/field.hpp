#pragma once

#include <concepts>

#include "pmzv/arith/padic.hpp"
#include "pmzv/arith/rational.hpp"

namespace pmzv {

// Coefficient field used by the generic series and engine code.
template <typename F>
concept CoefficientField = requires(const F& f, const typename F::value_type& a, const Integer& n,
                                    const Rational& q) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_integer(n) } -> std::convertible_to<typename F::value_type>;
  { f.from_rational(q) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { a + a } -> std::convertible_to<typename F::value_type>;
  { a - a } -> std::convertible_to<typename F::value_type>;
  { a * a } -> std::convertible_to<typename F::value_type>;
  { a / a } -> std::convertible_to<typename F::value_type>;
  { -a } -> std::convertible_to<typename F::value_type>;
};

struct RationalField {
  using value_type = Rational;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_integer(const Integer& n) const { return Rational(n); }
  Rational from_rational(const Rational& q) const { return q; }
  bool is_zero(const Rational& a) const { return a == 0; }
};

// Q_p with exact constants imported at a fixed relative precision.
struct PadicField {
  using value_type = Padic;

  long p = 2;
  long precision = 20;

  Padic zero() const { return Padic::zero(p); }
  Padic one() const { return Padic::from_integer(1, p, precision); }
  Padic from_integer(const Integer& n) const { return Padic::from_integer(n, p, precision); }
  Padic from_rational(const Rational& q) const { return Padic::from_rational_relative(q, p, precision); }
  bool is_zero(const Padic& a) const { return a.is_zero(); }
};

// True only for zeros that carry no error term; a Padic O(p^N) is not exact.
inline bool is_exact_zero(const RationalField&, const Rational& a) { return a == 0; }
inline bool is_exact_zero(const PadicField&, const Padic& a) {
  return a.is_zero() && a.absolute_precision() >= Padic::kExact;
}

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<PadicField>);

}  // namespace pmzv
