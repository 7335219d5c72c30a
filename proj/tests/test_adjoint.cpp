#include <doctest.h>

#include <random>

#include "pmzv/adjoint/adjoint.hpp"
#include "pmzv/verify/suites.hpp"

using namespace pmzv;

namespace {

Word W(const char* s) { return Word::parse(s); }
const RationalField Q{};

MzvTable<RationalField> random_table(std::uint64_t seed, int weight) {
  std::mt19937_64 rng(seed);
  MzvTable<RationalField> t(Q, 5);
  for (const Index& idx : indices_up_to_weight(weight)) {
    t.set(idx, random_rational(rng));
  }
  return t;
}

}  // namespace

TEST_SUITE("adjoint") {

TEST_CASE("table lookups") {
  MzvTable<RationalField> t(Q, 5);
  t.set({1, 2}, Rational(3, 4));
  CHECK(t.contains({1, 2}));
  CHECK(t.at({1, 2}) == Rational(3, 4));
  CHECK(t.max_depth() == 2);
  CHECK_THROWS_AS(t.at({3}), InsufficientTable);
}

TEST_CASE("phi from a table") {
  auto t = random_table(1, 5);
  auto phi = phi_from_table(t, 5);
  CHECK(phi[W("")] == 1);
  CHECK(phi[W("0")] == 0);
  CHECK(phi[W("1")] == -t.at({1}));
  CHECK(phi[W("000")] == 0);
  CHECK(phi[W("01")] == -t.at({2}));
  CHECK(phi[W("011")] == t.at({1, 2}));
  CHECK(phi[W("10")] == -phi[W("01")]);
}

TEST_CASE("phi is group-like when the table satisfies the shuffle relations") {
  // exp of a Lie series has its index-word coefficients; complete from those
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    auto G = random_grouplike(rng, 4);
    G.set(W("1"), 0);
    MzvTable<RationalField> t(Q, 5);
    for (const Index& idx : indices_up_to_weight(4)) {
      const Rational& c = G[index_to_word(idx)];
      t.set(idx, idx.size() % 2 == 0 ? c : Rational(-c));
    }
    auto phi = phi_from_table(t, 4);
    for (const Word& w : words_up_to_weight(4)) {
      CHECK_MESSAGE(phi[w] == G[w], w.str());
    }
    CHECK(is_grouplike(phi).grouplike);
  }
}

TEST_CASE("adjoint closed formula, special words") {
  auto t = random_table(2, 6);
  CHECK(adjoint_mzv(W("1"), t) == 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(adjoint_mzv(Word::e0_power(n), t) == 0);
  }
  CHECK(adjoint_mzv(W("010"), t) == 0);
  CHECK(adjoint_mzv(W("01"), t) == 0);
  CHECK(adjoint_mzv(W("10"), t) == 0);
  for (int n1 = 1; n1 <= 3; ++n1) {
    for (int B = 1; B + n1 <= 5; ++B) {
      Word w = W("1") + Word::e0_power(static_cast<std::size_t>(n1 - 1)) + W("1") +
               Word::e0_power(static_cast<std::size_t>(B));
      CHECK(adjoint_mzv(w, t) == Rational(binomial_negative(n1, B)) * t.at({n1 + B}));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    Word w = W("1") + Word::e0_power(static_cast<std::size_t>(n - 1)) + W("1");
    CHECK(adjoint_mzv(w, t) == Rational(1 + (n % 2 == 0 ? 1 : -1)) * t.at({n}));
  }
}

TEST_CASE("conjugation reference, special words") {
  auto t = random_table(3, 6);
  CHECK(adjoint_mzv_via_conjugation(W("1"), t) == 1);
  CHECK(adjoint_mzv_via_conjugation(W("010"), t) == 0);
  CHECK(adjoint_mzv_via_conjugation(W("000"), t) == 0);
}

TEST_CASE("closed formula equals conjugation for any table") {
  for (std::uint64_t seed : {4u, 5u, 6u}) {
    auto t = random_table(seed, 5);
    for (const Word& w : words_up_to_weight(5)) {
      CHECK_MESSAGE(adjoint_mzv(w, t) == adjoint_mzv_via_conjugation(w, t), w.str());
    }
  }
}

TEST_CASE("adjoint values read only lower depths") {
  auto t = random_table(7, 6);
  t.enable_access_log();
  for (const Word& w : words_up_to_weight(6)) {
    if (w.depth() == 0) {
      continue;
    }
    t.clear_access_log();
    (void)adjoint_mzv(w, t);
    for (const Index& idx : t.access_log()) {
      CHECK_MESSAGE(idx.size() + 1 <= w.depth(), w.str() << " read depth " << idx.size());
    }
  }
}

TEST_CASE("depth one adjoint values need no table") {
  MzvTable<RationalField> empty(Q, 5);
  CHECK(adjoint_mzv(W("1"), empty) == 1);
  CHECK(adjoint_mzv(W("0100"), empty) == 0);
  CHECK_THROWS_AS(adjoint_mzv(W("101"), empty), InsufficientTable);
}

TEST_CASE("adjoint cache matches direct evaluation") {
  auto t = random_table(8, 5);
  AdjointCache<RationalField> cache(t);
  for (const Word& w : words_up_to_weight(5)) {
    CHECK(cache(w) == adjoint_mzv(w, t));
    CHECK(cache(w) == adjoint_mzv(w, t));
  }
}

}
