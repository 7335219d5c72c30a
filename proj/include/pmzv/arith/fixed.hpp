#pragma once

#include <vector>

#include "pmzv/arith/padic.hpp"

namespace pmzv {

// A vector of p-adic numbers sharing one denominator and one error bound:
// entry i is x[i] * p^(-scale), every entry known modulo p^precision.
//
// Bulk transforms (Horner passes, Cauchy products) run on plain integers
// here; converting back to Padic reports the shared bound, which is never
// better than what per-entry interval arithmetic would give.
struct FixedVector {
  long p = 2;
  long scale = 0;
  long precision = Padic::kExact;
  std::vector<Integer> x;

  static FixedVector from_padic(const std::vector<Padic>& values, long p);
  std::vector<Padic> to_padic() const;

  bool exact_zero() const { return precision >= Padic::kExact; }
  // Smallest valuation among nonzero entries, or kExact.
  long min_valuation() const;
  // Reduce every entry modulo p^(precision + scale).
  void reduce();
};

// (sum_k a_k y^k) with y = -z/(1-z), truncated at a.size() - 1; a[0] ignored.
FixedVector fixed_mobius(const FixedVector& a);

// Cauchy product truncated at order.
FixedVector fixed_mul(const FixedVector& a, const FixedVector& b, std::size_t order);

// out[t] = sum_{i <= t} a[i] b[t - i] for the requested t only (others zero).
FixedVector fixed_convolve_at(const FixedVector& a, const FixedVector& b, const std::vector<std::size_t>& targets,
                              std::size_t size);

}  // namespace pmzv
