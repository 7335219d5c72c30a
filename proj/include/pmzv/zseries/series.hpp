#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pmzv/arith/binomial.hpp"
#include "pmzv/arith/field.hpp"

namespace pmzv {

// Generic Cauchy product; Padic coefficients take the fixed-point route.
template <CoefficientField F>
std::vector<typename F::value_type> cauchy_product(const F& field, const std::vector<typename F::value_type>& a,
                                                   const std::vector<typename F::value_type>& b, std::size_t order) {
  std::vector<typename F::value_type> r(order + 1, field.zero());
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (is_exact_zero(field, a[i])) {
      continue;
    }
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

std::vector<Padic> cauchy_product(const PadicField& field, const std::vector<Padic>& a, const std::vector<Padic>& b,
                                  std::size_t order);

// c_0 + c_1 z + ... + c_M z^M + O(z^{M+1}) over a coefficient field.
template <CoefficientField F>
class TruncatedZSeries {
 public:
  using value_type = typename F::value_type;

  TruncatedZSeries() = default;
  TruncatedZSeries(F field, std::size_t order) : field_(field), c_(order + 1, field.zero()) {}
  TruncatedZSeries(F field, std::vector<value_type> coefficients) : field_(field), c_(std::move(coefficients)) {
    if (c_.empty()) {
      throw std::invalid_argument("series needs at least one coefficient");
    }
  }

  static TruncatedZSeries constant(F field, std::size_t order, const value_type& c) {
    TruncatedZSeries s(field, order);
    s.c_[0] = c;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const F& field() const { return field_; }
  const value_type& operator[](std::size_t n) const { return c_[n]; }
  value_type& operator[](std::size_t n) { return c_[n]; }
  const std::vector<value_type>& coefficients() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [&](const value_type& x) { return field_.is_zero(x); });
  }

  TruncatedZSeries truncated(std::size_t order) const {
    std::vector<value_type> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return TruncatedZSeries(field_, std::move(c));
  }

  TruncatedZSeries operator-() const {
    TruncatedZSeries r = *this;
    for (auto& x : r.c_) {
      x = -x;
    }
    return r;
  }
  TruncatedZSeries scaled(const value_type& k) const {
    TruncatedZSeries r = *this;
    for (auto& x : r.c_) {
      x = x * k;
    }
    return r;
  }

  friend TruncatedZSeries operator+(const TruncatedZSeries& s, const TruncatedZSeries& t) {
    std::size_t m = std::min(s.order(), t.order());
    TruncatedZSeries r(s.field_, m);
    for (std::size_t n = 0; n <= m; ++n) {
      r.c_[n] = s.c_[n] + t.c_[n];
    }
    return r;
  }
  friend TruncatedZSeries operator-(const TruncatedZSeries& s, const TruncatedZSeries& t) { return s + (-t); }
  friend TruncatedZSeries operator*(const TruncatedZSeries& s, const TruncatedZSeries& t) {
    std::size_t m = std::min(s.order(), t.order());
    return TruncatedZSeries(s.field_, cauchy_product(s.field_, s.c_, t.c_, m));
  }

 private:
  F field_{};
  std::vector<value_type> c_;
};

template <CoefficientField F>
TruncatedZSeries<F> series_add(const TruncatedZSeries<F>& s, const TruncatedZSeries<F>& t) {
  return s + t;
}

template <CoefficientField F>
TruncatedZSeries<F> series_mul(const TruncatedZSeries<F>& s, const TruncatedZSeries<F>& t) {
  return s * t;
}

// Coefficients of sum_{k>=1} a_k (z/(z-1))^k:
//   b_n = sum_{k=1}^{n} (-1)^k a_k C(n-1, n-k),  b_0 = 0.
// a[0] is ignored. Evaluated by Horner in y = -z/(1-z), multiplication by y
// being a shift followed by prefix sums.
template <CoefficientField F>
std::vector<typename F::value_type> mobius_transform(const F& field, const std::vector<typename F::value_type>& a) {
  using V = typename F::value_type;
  std::size_t M = a.empty() ? 0 : a.size() - 1;
  std::vector<V> r(M + 1, field.zero());
  for (std::size_t k = M; k >= 1; --k) {
    r[0] = r[0] + a[k];
    V s = field.zero();
    for (std::size_t n = 0; n <= M; ++n) {
      V t = r[n];
      r[n] = -s;
      s = s + t;
    }
  }
  return r;
}

std::vector<Padic> mobius_transform(const PadicField& field, const std::vector<Padic>& a);

// s(z/(z-1)); unlike the sequence form the constant term is kept.
template <CoefficientField F>
TruncatedZSeries<F> mobius_transform(const TruncatedZSeries<F>& s) {
  TruncatedZSeries<F> r(s.field(), mobius_transform(s.field(), s.coefficients()));
  r[0] = s[0];
  return r;
}

enum class MobiusKernel {
  corrected,  // (-1)^k inside the sum
  literal,    // (-1)^n outside the sum; fails the series oracle
};

// Definition form of the transform, O(M^2) with explicit binomials.
template <CoefficientField F>
std::vector<typename F::value_type> mobius_transform_binomial(const F& field,
                                                              const std::vector<typename F::value_type>& a,
                                                              MobiusKernel kernel = MobiusKernel::corrected) {
  using V = typename F::value_type;
  std::size_t M = a.empty() ? 0 : a.size() - 1;
  std::vector<V> b(M + 1, field.zero());
  for (std::size_t n = 1; n <= M; ++n) {
    V acc = field.zero();
    for (std::size_t k = 1; k <= n; ++k) {
      Integer c = binomial(static_cast<long>(n - 1), static_cast<long>(n - k));
      if (kernel == MobiusKernel::corrected && k % 2 == 1) {
        c = -c;
      }
      acc = acc + a[k] * field.from_integer(c);
    }
    b[n] = (kernel == MobiusKernel::literal && n % 2 == 1) ? V(-acc) : acc;
  }
  return b;
}

// Coefficients of sum_{k>=1} a_k (z^p/(z^p-1))^k up to z^order; only
// multiples of p are nonzero. Needs a[0 .. order/p].
template <CoefficientField F>
std::vector<typename F::value_type> frobenius_mobius_transform(const F& field,
                                                               const std::vector<typename F::value_type>& a, long p,
                                                               std::size_t order) {
  std::size_t inner = order / static_cast<std::size_t>(p);
  std::vector<typename F::value_type> head(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(inner + 1, a.size())));
  head.resize(inner + 1, field.zero());
  auto b = mobius_transform(field, head);
  std::vector<typename F::value_type> out(order + 1, field.zero());
  for (std::size_t n = 0; n <= inner; ++n) {
    out[n * static_cast<std::size_t>(p)] = b[n];
  }
  return out;
}

// s(z^p/(z^p-1)) up to z^order, constant term kept.
template <CoefficientField F>
TruncatedZSeries<F> frobenius_mobius_transform(const TruncatedZSeries<F>& s, long p, std::size_t order) {
  TruncatedZSeries<F> r(s.field(), frobenius_mobius_transform(s.field(), s.coefficients(), p, order));
  r[0] = s[0];
  return r;
}

// sum_{n>0, p does not divide n} z^n / n
template <CoefficientField F>
TruncatedZSeries<F> li1p_series(const F& field, std::size_t order, long p) {
  TruncatedZSeries<F> s(field, order);
  for (std::size_t n = 1; n <= order; ++n) {
    if (n % static_cast<std::size_t>(p) != 0) {
      s[n] = field.from_rational(Rational(1, static_cast<unsigned long>(n)));
    }
  }
  return s;
}

// s^b / b!; s must have zero constant term.
template <CoefficientField F>
TruncatedZSeries<F> series_power_over_factorial(const TruncatedZSeries<F>& s, long b) {
  if (!s.field().is_zero(s[0])) {
    throw std::invalid_argument("series_power_over_factorial needs a zero constant term");
  }
  if (b < 0) {
    throw std::invalid_argument("negative power");
  }
  TruncatedZSeries<F> r = TruncatedZSeries<F>::constant(s.field(), s.order(), s.field().one());
  Integer factorial = 1;
  for (long k = 1; k <= b; ++k) {
    r = r * s;
    factorial *= k;
  }
  if (b > 1) {
    r = r.scaled(s.field().from_rational(Rational(Integer(1), factorial)));
  }
  return r;
}

}  // namespace pmzv
