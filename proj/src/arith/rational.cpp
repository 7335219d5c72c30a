#include "pmzv/arith/rational.hpp"

#include <stdexcept>

namespace pmzv {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

long p_valuation(const Integer& n, long p) {
  if (n == 0) {
    throw std::domain_error("valuation of zero");
  }
  Integer rest;
  Integer prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long p_valuation(const Rational& q, long p) {
  return p_valuation(Integer(q.get_num()), p) - p_valuation(Integer(q.get_den()), p);
}

Integer integer_power(long base, unsigned long exponent) {
  Integer r;
  Integer b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_prime(long n) {
  if (n < 2) {
    return false;
  }
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace pmzv
