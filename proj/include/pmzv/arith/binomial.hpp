#pragma once

#include "pmzv/arith/rational.hpp"

namespace pmzv {

// C(m, k), zero outside 0 <= k <= m.
inline Integer binomial(long m, long k) {
  if (m < 0 || k < 0 || k > m) {
    return 0;
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return r;
}

// Coefficient of X^k in (1+X)^{-n}, i.e. (-1)^k C(n+k-1, k).
inline Integer binomial_negative(long n, long k) {
  Integer c = binomial(n + k - 1, k);
  return (k % 2 == 0) ? c : Integer(-c);
}

}  // namespace pmzv
