#include <doctest.h>

#include <random>

#include "pmzv/arith/binomial.hpp"
#include "pmzv/arith/field.hpp"
#include "pmzv/arith/padic.hpp"
#include "pmzv/arith/rational.hpp"

using namespace pmzv;

TEST_SUITE("arith") {

TEST_CASE("rationals are kept in lowest terms") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(make_rational(0, 7).get_den() == 1);
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("p-adic valuation of integers and rationals") {
  CHECK(p_valuation(Integer(48), 2) == 4);
  CHECK(p_valuation(Rational(5, 27), 3) == -3);
  CHECK(p_valuation(Rational(5, 27), 5) == 1);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("from_rational: one half at p = 3") {
  Padic x = Padic::from_rational(Rational(1, 2), 3, 4);
  CHECK(x.valuation() == 0);
  CHECK(x.absolute_precision() == 4);
  CHECK(Integer(x.unit() % 81) == 41);
}

TEST_CASE("from_rational: exact power of p") {
  Padic x = Padic::from_rational(Rational(1, 3), 3, 10);
  CHECK(x.valuation() == -1);
  CHECK(x.unit() == 1);
}

TEST_CASE("from_rational: zero keeps its absolute precision") {
  Padic z = Padic::from_rational(Rational(0), 5, 6);
  CHECK(z.is_zero());
  CHECK(z.absolute_precision() == 6);
}

TEST_CASE("sum is known to the smaller absolute precision") {
  Padic x = Padic::from_rational(Rational(7, 3), 5, 5);
  Padic y = Padic::from_rational(Rational(2, 9), 5, 3);
  CHECK((x + y).absolute_precision() == 3);
  CHECK((x + y) == Padic::from_rational(Rational(7, 3) + Rational(2, 9), 5, 3));
}

TEST_CASE("valuations add under multiplication") {
  Padic x = Padic::from_rational(Rational(50), 5, 12);
  Padic y = Padic::from_rational(Rational(3, 5), 5, 12);
  CHECK((x * y).valuation() == 1);
  CHECK((x * y).relative_precision() == std::min(x.relative_precision(), y.relative_precision()));
}

TEST_CASE("inverse of 2 at p = 3") {
  Padic two = Padic::from_rational(Rational(2), 3, 4);
  CHECK(two.inverse() == Padic::from_rational(Rational(1, 2), 3, 4));
  CHECK(two * two.inverse() == Padic::from_rational(Rational(1), 3, 4));
}

TEST_CASE("inverting zero is an error") {
  CHECK_THROWS_AS(Padic::zero(5, 4).inverse(), PrecisionError);
}

TEST_CASE("mixed primes are rejected") {
  Padic a = Padic::from_rational(Rational(1), 3, 4);
  Padic b = Padic::from_rational(Rational(1), 5, 4);
  CHECK_THROWS(a + b);
}

TEST_CASE("equality is agreement to the common precision") {
  Padic a = Padic::from_rational(Rational(1), 5, 3);
  Padic b = Padic::from_rational(Rational(1 + 125), 5, 6);
  CHECK(a == b);
  CHECK_FALSE(Padic::from_rational(Rational(1), 5, 4) == b);
  CHECK(a.agreement(b) >= 3);
}

TEST_CASE("truncation lowers precision only") {
  Padic x = Padic::from_rational(Rational(3, 7), 5, 10);
  Padic t = x.truncated(4);
  CHECK(t.absolute_precision() == 4);
  CHECK(t == x);
  CHECK(x.truncated(20).absolute_precision() == 10);
}

TEST_CASE("unit digits are little endian") {
  Padic x = Padic::from_rational(Rational(1 + 2 * 5 + 3 * 25), 5, 3);
  CHECK(x.unit_digits() == std::vector<long>{1, 2, 3});
}

TEST_CASE("ring operations agree with rationals mod p^k") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int t = 0; t < 200; ++t) {
      Rational a(num(rng), den(rng)), b(num(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      const long k = 12;
      Padic x = Padic::from_rational(a, p, k), y = Padic::from_rational(b, p, k);
      CHECK(x + y == Padic::from_rational(a + b, p, k));
      CHECK(x - y == Padic::from_rational(a - b, p, k));
      CHECK(x * y == Padic::from_rational(a * b, p, 2 * k));
      if (b != 0) {
        CHECK(x / y == Padic::from_rational(a / b, p, 2 * k));
      }
    }
  }
}

TEST_CASE("relative constructors keep relative precision") {
  PadicField f{5, 8};
  Padic x = f.from_rational(Rational(1, 25));
  CHECK(x.valuation() == -2);
  CHECK(x.relative_precision() == 8);
  CHECK(is_exact_zero(f, f.zero()));
  CHECK_FALSE(is_exact_zero(f, Padic::zero(5, 4)));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("binomial_negative") {
  CHECK(binomial_negative(2, 3) == -4);
  CHECK(binomial_negative(7, 0) == 1);
  CHECK(binomial_negative(1, 5) == -1);
}

TEST_CASE("binom(-n, k) matches the expansion of (1+X)^-n") {
  for (long n = 1; n <= 5; ++n) {
    std::vector<Integer> c(8, 0);
    c[0] = 1;
    for (long t = 0; t < n; ++t) {
      for (std::size_t k = 1; k < c.size(); ++k) {
        c[k] -= c[k - 1];
      }
    }
    for (long k = 0; k < 8; ++k) {
      CHECK(binomial_negative(n, k) == c[static_cast<std::size_t>(k)]);
    }
  }
}

}
