#include "pmzv/arith/padic.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace pmzv {

namespace {

long clamp_precision(long n) { return std::min(n, Padic::kExact); }

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

const Integer& prime_power(long p, long k) {
  thread_local std::unordered_map<long, std::vector<Integer>> cache;
  if (k < 0) {
    throw std::domain_error("negative exponent in prime_power");
  }
  auto& powers = cache[p];
  if (powers.empty()) {
    powers.emplace_back(1);
  }
  while (static_cast<long>(powers.size()) <= k) {
    powers.push_back(powers.back() * p);
  }
  return powers[static_cast<std::size_t>(k)];
}

Padic Padic::zero(long p, long absolute_precision) {
  Padic z;
  z.prime_ = p;
  z.abs_ = clamp_precision(absolute_precision);
  return z;
}

Padic Padic::normalized(long p, long valuation, Integer unit, long relative_precision) {
  if (relative_precision <= 0 || unit == 0) {
    return zero(p, valuation + relative_precision);
  }
  Integer rest;
  Integer prime(p);
  long k = static_cast<long>(mpz_remove(rest.get_mpz_t(), unit.get_mpz_t(), prime.get_mpz_t()));
  long rel = relative_precision - k;
  if (rel <= 0) {
    return zero(p, valuation + relative_precision);
  }
  Padic x;
  x.prime_ = p;
  x.zero_ = false;
  x.valuation_ = valuation + k;
  x.rel_ = rel;
  x.unit_ = mod_positive(rest, prime_power(p, rel));
  return x;
}

Padic Padic::from_parts(long p, long valuation, const Integer& unit, long relative_precision) {
  return normalized(p, valuation, unit, relative_precision);
}

Padic Padic::from_integer(const Integer& n, long p, long relative_precision) {
  return from_rational_relative(Rational(n), p, relative_precision);
}

Padic Padic::from_rational_relative(const Rational& q, long p, long relative_precision) {
  if (q == 0) {
    return zero(p);
  }
  long v = p_valuation(q, p);
  return from_rational(q, p, v + relative_precision);
}

Padic Padic::from_rational(const Rational& q, long p, long absolute_precision) {
  if (q == 0) {
    return zero(p, absolute_precision);
  }
  long v = p_valuation(q, p);
  long rel = absolute_precision - v;
  if (rel <= 0) {
    return zero(p, absolute_precision);
  }
  Integer num = q.get_num();
  Integer den = q.get_den();
  Integer prime(p);
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  const Integer& modulus = prime_power(p, rel);
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Padic x;
  x.prime_ = p;
  x.zero_ = false;
  x.valuation_ = v;
  x.rel_ = rel;
  x.unit_ = mod_positive(num * den_inv, modulus);
  return x;
}

std::vector<long> Padic::unit_digits() const {
  std::vector<long> digits;
  if (zero_) {
    return digits;
  }
  Integer u = unit_;
  Integer prime(prime_);
  Integer r;
  for (long i = 0; i < rel_; ++i) {
    mpz_fdiv_qr(u.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), prime.get_mpz_t());
    digits.push_back(r.get_si());
  }
  return digits;
}

Padic Padic::truncated(long absolute_precision) const {
  if (absolute_precision >= this->absolute_precision()) {
    return *this;
  }
  if (zero_ || absolute_precision <= valuation_) {
    return zero(prime_, absolute_precision);
  }
  return normalized(prime_, valuation_, unit_, absolute_precision - valuation_);
}

Padic Padic::inverse() const {
  if (zero_) {
    throw PrecisionError("inverse of a p-adic number indistinguishable from zero");
  }
  Padic x;
  x.prime_ = prime_;
  x.zero_ = false;
  x.valuation_ = -valuation_;
  x.rel_ = rel_;
  mpz_invert(x.unit_.get_mpz_t(), unit_.get_mpz_t(), prime_power(prime_, rel_).get_mpz_t());
  return x;
}

void Padic::check_prime(const Padic& other) const {
  if (prime_ != 0 && other.prime_ != 0 && prime_ != other.prime_) {
    throw std::invalid_argument("p-adic operands over different primes");
  }
}

Padic operator+(const Padic& x, const Padic& y) {
  x.check_prime(y);
  long p = x.prime_ != 0 ? x.prime_ : y.prime_;
  long abs = std::min(x.absolute_precision(), y.absolute_precision());
  if (x.zero_) {
    Padic r = y.truncated(abs);
    r.prime_ = p;
    return r;
  }
  if (y.zero_) {
    Padic r = x.truncated(abs);
    r.prime_ = p;
    return r;
  }
  long v = std::min(x.valuation_, y.valuation_);
  if (abs <= v) {
    return Padic::zero(p, abs);
  }
  long rel = abs - v;
  Integer sum = 0;
  if (x.valuation_ - v < rel) {
    sum += x.unit_ * prime_power(p, x.valuation_ - v);
  }
  if (y.valuation_ - v < rel) {
    sum += y.unit_ * prime_power(p, y.valuation_ - v);
  }
  return Padic::normalized(p, v, std::move(sum), rel);
}

Padic Padic::operator-() const {
  Padic r = *this;
  if (!zero_) {
    r.unit_ = mod_positive(-unit_, prime_power(prime_, rel_));
  }
  return r;
}

Padic operator-(const Padic& x, const Padic& y) { return x + (-y); }

Padic operator*(const Padic& x, const Padic& y) {
  x.check_prime(y);
  long p = x.prime_ != 0 ? x.prime_ : y.prime_;
  if (x.zero_ || y.zero_) {
    long bound = 0;
    if (x.zero_ && y.zero_) {
      bound = clamp_precision(x.abs_) + clamp_precision(y.abs_);
    } else if (x.zero_) {
      bound = x.abs_ + y.valuation_;
    } else {
      bound = y.abs_ + x.valuation_;
    }
    return Padic::zero(p, bound);
  }
  Padic r;
  r.prime_ = p;
  r.zero_ = false;
  r.valuation_ = x.valuation_ + y.valuation_;
  r.rel_ = std::min(x.rel_, y.rel_);
  r.unit_ = mod_positive(x.unit_ * y.unit_, prime_power(p, r.rel_));
  return r;
}

Padic operator/(const Padic& x, const Padic& y) { return x * y.inverse(); }

long Padic::agreement(const Padic& other) const {
  Padic d = *this - other;
  return d.zero_ ? d.abs_ : d.valuation_;
}

bool operator==(const Padic& x, const Padic& y) { return (x - y).is_zero(); }

std::string Padic::to_string() const {
  std::ostringstream out;
  if (zero_) {
    if (abs_ >= kExact) {
      return "0";
    }
    out << "O(" << prime_ << "^" << abs_ << ")";
    return out.str();
  }
  if (valuation_ != 0) {
    out << prime_ << "^" << valuation_ << " * ";
  }
  out << "(";
  std::vector<long> digits = unit_digits();
  bool first = true;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) {
      continue;
    }
    if (!first) {
      out << " + ";
    }
    first = false;
    out << digits[i];
    if (i == 1) {
      out << "*" << prime_;
    } else if (i > 1) {
      out << "*" << prime_ << "^" << i;
    }
  }
  out << ") + O(" << prime_ << "^" << absolute_precision() << ")";
  return out.str();
}

}  // namespace pmzv
