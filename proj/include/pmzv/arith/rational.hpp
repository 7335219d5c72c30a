#pragma once

#include <gmpxx.h>

#include <string>

namespace pmzv {

// Arbitrary-precision integers and rationals. mpq_class keeps every value
// canonical: lowest terms, positive denominator, zero as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

// Exponent of p in n; n must be nonzero.
long p_valuation(const Integer& n, long p);
long p_valuation(const Rational& q, long p);

Integer integer_power(long base, unsigned long exponent);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

bool is_prime(long n);

}  // namespace pmzv
