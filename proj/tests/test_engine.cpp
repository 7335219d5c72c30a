#include <doctest.h>

#include <random>

#include "pmzv/engine/table.hpp"
#include "pmzv/verify/suites.hpp"

using namespace pmzv;

namespace {

const RationalField Q{};

MzvTable<RationalField> random_table(std::uint64_t seed, int weight, long p) {
  std::mt19937_64 rng(seed);
  MzvTable<RationalField> t(Q, p);
  for (const Index& idx : indices_up_to_weight(weight)) {
    t.set(idx, random_rational(rng));
  }
  return t;
}

std::size_t ipow(long p, int N) {
  std::size_t r = 1;
  for (int i = 0; i < N; ++i) {
    r *= static_cast<std::size_t>(p);
  }
  return r;
}

TableOptions small_options(long p, int weight) {
  TableOptions o;
  o.p = p;
  o.weight = weight;
  o.target_precision = 8;
  return o;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("sign convention names") {
  CHECK(parse_sign_convention("mahler") == SignConvention::mahler);
  CHECK(parse_sign_convention("literal") == SignConvention::literal);
  CHECK(std::string(to_string(SignConvention::literal)) == "literal");
  CHECK_THROWS_AS(parse_sign_convention("other"), std::invalid_argument);
  CHECK(parse_sampling_grid("geometric") == SamplingGrid::geometric);
  CHECK_THROWS_AS(parse_sampling_grid("sparse"), std::invalid_argument);
}

TEST_CASE("restricted_composition_sum") {
  CHECK(restricted_composition_sum(0, 0, 3) == 1);
  CHECK(restricted_composition_sum(0, 4, 3) == 0);
  CHECK(restricted_composition_sum(1, 7, 5) == Rational(1, 7));
  CHECK(restricted_composition_sum(1, 10, 5) == 0);
  // only (2, 2) has both parts prime to 3
  CHECK(restricted_composition_sum(2, 4, 3) == Rational(1, 8));
  CHECK(restricted_composition_sum(2, 4, 5) == Rational(11, 24));
  for (long p : {2L, 3L, 5L}) {
    for (long b = 0; b <= 4; ++b) {
      for (long l = 0; l <= 12; ++l) {
        CHECK(restricted_composition_sum(b, l, p) == composition_enumeration(b, l, p));
      }
    }
  }
}

TEST_CASE("partial sums at small m") {
  for (long p : {2L, 3L, 5L, 7L}) {
    auto t = random_table(1, 4, p);
    AdjointCache<RationalField> ad(t);
    TriangleEvaluator<RationalField> ev(Q, p, [&](const Word& w) { return ad(w); });
    CHECK(theorem_partial_sum(ev, {1}, 1) == 1);
    CHECK(theorem_partial_sum(ev, {2}, 1) == 1);
    CHECK(theorem_partial_sum(ev, {1}, 0) == 0);
    for (int N = 1; N <= 3; ++N) {
      CHECK(theorem_partial_sum(ev, {1}, ipow(p, N)) == 0);
    }
    CHECK(example_depth1_sum(Q, 1, 1, p) == theorem_partial_sum(ev, {1}, 1));
  }
}

TEST_CASE("sign conventions differ by the depth parity") {
  auto t = random_table(2, 4, 5);
  AdjointCache<RationalField> ad(t);
  TriangleEvaluator<RationalField> ev(Q, 5, [&](const Word& w) { return ad(w); });
  for (const Index& idx : indices_up_to_weight(3)) {
    for (std::size_t m : {3u, 10u, 25u}) {
      Rational a = theorem_partial_sum(ev, idx, m, SignConvention::mahler);
      Rational b = theorem_partial_sum(ev, idx, m, SignConvention::literal);
      CHECK(a == -b);
      CHECK(a == (idx.size() % 2 == 1 ? ev.coefficient(idx, m) : Rational(-ev.coefficient(idx, m))));
    }
  }
}

TEST_CASE("written-out depth one and two sums match the general evaluator") {
  const long p = 3;
  auto t = random_table(3, 4, p);
  AdjointCache<RationalField> ad(t);
  TriangleEvaluator<RationalField> ev(Q, p, [&](const Word& w) { return ad(w); });
  auto zeta1 = [&](int n) { return t.at({n}); };
  for (std::size_t m = 1; m <= 2 * p * p; ++m) {
    for (int n = 1; n <= 4; ++n) {
      CHECK(example_depth1_sum(Q, n, m, p) == theorem_partial_sum(ev, {n}, m));
    }
    for (int n1 = 1; n1 <= 3; ++n1) {
      for (int n2 = 1; n1 + n2 <= 4; ++n2) {
        CHECK(example_depth2_sum<RationalField>(Q, n1, n2, m, p, zeta1) == theorem_partial_sum(ev, {n1, n2}, m));
      }
    }
  }
}

TEST_CASE("depth one partial sums are Cauchy along p^N") {
  PadicField F{5, 40};
  std::vector<Padic> s;
  for (int N = 1; N <= 3; ++N) {
    s.push_back(example_depth1_sum(F, 2, ipow(5, N), 5));
  }
  long v1 = (s[1] - s[0]).valuation();
  long v2 = (s[2] - s[1]).valuation();
  CHECK(v1 >= 1);
  CHECK(v2 > v1);
}

TEST_CASE("evaluator rejects bad indices and missing adjoint values") {
  MzvTable<RationalField> empty(Q, 5);
  TriangleEvaluator<RationalField> ev(Q, 5, [&](const Word& w) { return adjoint_mzv(w, empty); });
  CHECK_THROWS(theorem_partial_sum(ev, {}, 3));
  CHECK_THROWS(theorem_partial_sum(ev, {0, 2}, 3));
  CHECK_THROWS_AS(theorem_partial_sum(ev, {1, 1}, 10), InsufficientTable);
}

TEST_CASE("sample points") {
  CHECK(sample_points(3, 3, SamplingGrid::dense) == std::vector<std::size_t>{3, 6, 9, 18, 27});
  CHECK(sample_points(3, 3, SamplingGrid::geometric) == std::vector<std::size_t>{3, 9, 27});
  CHECK(sample_points(5, 2, SamplingGrid::dense).size() == 5);
  CHECK_THROWS(sample_points(5, 0, SamplingGrid::dense));
}

TEST_CASE("extrapolation is exact on polynomials") {
  const long p = 5, prec = 30;
  std::vector<std::size_t> xs = sample_points(p, 3, SamplingGrid::dense);
  auto f = [](std::size_t x) -> Rational { return Rational(7) - Rational(3 * static_cast<long>(x)) + make_rational(static_cast<long>(x * x), 2); };
  std::vector<Padic> ys;
  for (std::size_t x : xs) {
    ys.push_back(Padic::from_rational(f(x), p, prec));
  }
  auto ex = neville_extrapolants(xs, ys, p, prec);
  REQUIRE(ex.size() == xs.size());
  for (std::size_t k = 2; k < ex.size(); ++k) {
    CHECK(ex[k] == Padic::from_rational(Rational(7), p, 10));
  }
}

TEST_CASE("value at infinity from coefficient limits") {
  // f(inf) = a_0 - lim a_m for 1/(1-z), z/(1-z), 1/(1-z)^2
  const long p = 5, prec = 30;
  struct Case {
    std::function<Rational(std::size_t)> a;
    Rational at_infinity;
  };
  std::vector<Case> cases = {
      {[](std::size_t) { return Rational(1); }, Rational(0)},
      {[](std::size_t m) { return Rational(m == 0 ? 0 : 1); }, Rational(-1)},
      {[](std::size_t m) { return Rational(static_cast<long>(m) + 1); }, Rational(0)},
  };
  bool bare_limit_fails = false;
  for (const auto& c : cases) {
    std::vector<std::size_t> xs = sample_points(p, 6, SamplingGrid::geometric);
    std::vector<Padic> ys;
    for (std::size_t x : xs) {
      ys.push_back(Padic::from_rational(c.a(x), p, prec));
    }
    // lim over |m|_p -> 0 of a_m, read off at the last level
    Padic lim = ys.back();
    Padic a0 = Padic::from_rational(c.a(0), p, prec);
    Padic want = Padic::from_rational(c.at_infinity, p, prec);
    CHECK((a0 - lim - want).valuation() >= 4);
    if ((-lim - want).valuation() < 4) {
      bare_limit_fails = true;
    }
  }
  CHECK(bare_limit_fails);
}

TEST_CASE("limit of zeta(1) is exactly zero") {
  TableOptions o = small_options(5, 1);
  LimitReport r = compute_mzv({1}, o);
  CHECK(r.value.is_zero());
  for (const auto& level : r.levels) {
    CHECK(level.value.is_zero());
  }
  CHECK(r.certified_precision >= o.target_precision);
}

TEST_CASE("zeta(2) vanishes at p = 5") {
  LimitReport r = compute_mzv({2}, small_options(5, 2));
  CHECK(r.value.is_zero());
  CHECK(r.certified_precision >= 4);
  CHECK(r.levels.size() == 3);
  for (std::size_t i = 1; i < r.convergence.size(); ++i) {
    CHECK(r.convergence[i] >= r.convergence[i - 1]);
  }
}

TEST_CASE("mzv_limit needs two levels") {
  TableOptions o = small_options(5, 1);
  PadicField F{5, working_precision(o)};
  MzvTable<PadicField> t(F, 5);
  AdjointCache<PadicField> ad(t);
  TriangleEvaluator<PadicField> ev(F, 5, [&](const Word& w) { return ad(w); });
  LimitOptions lo;
  lo.n_max = 1;
  CHECK_THROWS_AS(mzv_limit(ev, {2}, lo), std::invalid_argument);
}

TEST_CASE("weight two table") {
  TableResult r = build_table(small_options(5, 2));
  CHECK(r.table.entries().size() == 3);
  CHECK(r.table.contains({1}));
  CHECK(r.table.contains({2}));
  CHECK(r.table.contains({1, 1}));
  CHECK(r.table.at({2}).is_zero());
}

TEST_CASE("weight six table at p = 5") {
  TableOptions o = small_options(5, 6);
  TableResult r = build_table(o);
  CHECK(r.table.entries().size() == 63);
  for (int n : {2, 4, 6}) {
    CHECK(r.table.at({n}).is_zero());
  }
  auto phi = phi_from_table(r.table, 6);
  auto check = shuffle_check(phi);
  CHECK(check.report.grouplike);
  CHECK(check.min_precision >= 1);
  // zeta(3)^2 from e0e0e1 sh e0e0e1, every term an index word of depth two
  Padic z3 = r.table.at({3});
  Padic rhs = Padic::zero(5);
  for (const auto& [w, c] : shuffle(Word::parse("001"), Word::parse("001"))) {
    REQUIRE(w.depth() == 2);
    rhs += PadicField{5, 40}.from_rational(c) * r.table.at(word_to_index(w));
  }
  CHECK(z3 * z3 == rhs);
  CHECK((z3 * z3 - rhs).absolute_precision() >= 1);
}

TEST_CASE("levels and precision defaults") {
  CHECK(default_n_max(2) == 6);
  CHECK(default_n_max(3) == 4);
  CHECK(default_n_max(5) == 3);
  CHECK(default_n_max(11) == 2);
  TableOptions o;
  o.levels_by_depth[2] = 4;
  CHECK(levels_for_depth(o, 1) == 3);
  CHECK(levels_for_depth(o, 2) == 4);
  CHECK(working_precision(o) == o.target_precision + 4 * o.weight * 4 + 16);
  o.guard = 5;
  CHECK(working_precision(o) == o.target_precision + 5);
}

TEST_CASE("tables reject bad primes") {
  TableOptions o = small_options(6, 2);
  CHECK_THROWS_AS(build_table(o), std::invalid_argument);
}

TEST_CASE("default sign passes the shuffle check") {
  TableOptions o = small_options(5, 4);
  CHECK(resolve_sign(o) == SignConvention::mahler);
}

TEST_CASE("thread count does not change values") {
  TableOptions a = small_options(7, 3);
  a.threads = 1;
  TableOptions b = a;
  b.threads = 4;
  auto ra = build_table(a), rb = build_table(b);
  for (const auto& [idx, v] : ra.table.entries()) {
    CHECK(v == rb.table.at(idx));
    CHECK(v.absolute_precision() == rb.table.at(idx).absolute_precision());
  }
}

}
