#include "pmzv/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace pmzv {

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
  SuiteResult result;
  Clock::time_point start = Clock::now();

  Run(const std::string& name, const std::string& identity) {
    result.name = name;
    result.identity = identity;
  }
  // Records the first failure only.
  void fail(const std::string& detail) {
    if (result.passed) {
      result.passed = false;
      result.detail = detail;
    }
  }
  bool ok() const { return result.passed; }
  void check(bool good, const std::function<std::string()>& detail) {
    ++result.checks;
    if (!good) {
      fail(detail());
    }
  }
  SuiteResult finish(const std::string& summary = "") {
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (result.passed && !summary.empty()) {
      result.detail = summary;
    }
    return result;
  }
};

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Padic& x) { return x.to_string(); }

MzvTable<RationalField> random_rational_table(std::mt19937_64& rng, int W) {
  MzvTable<RationalField> t(RationalField{}, 0);
  for (const Index& idx : indices_up_to_weight(W)) {
    t.set(idx, random_rational(rng));
  }
  return t;
}

TableOptions table_options(const SuiteConfig& c, long p, int W) {
  TableOptions o;
  o.p = p;
  o.weight = W;
  o.target_precision = c.precision;
  o.n_max = c.n_max;
  o.sign = c.sign;
  o.threads = c.threads;
  return o;
}

std::string describe_levels(const LimitReport& r) {
  std::ostringstream os;
  os << "zeta_" << r.p << "(" << format_index(r.index) << ") = " << r.value.to_string() << ", certified "
     << r.certified_precision << ", convergence [";
  for (std::size_t i = 0; i < r.convergence.size(); ++i) {
    os << (i ? " " : "") << r.convergence[i];
  }
  os << "]";
  return os.str();
}

// --- suites ---

SuiteResult suite_contraction(const SuiteConfig& c) {
  Run run("contraction", "substitute(A, B) equals expansion of each word of A with e1 -> B, weight <= 5, exact");
  std::mt19937_64 rng(c.seed);
  const std::size_t W = 5;
  RationalField q;
  std::bernoulli_distribution keep(0.35);
  std::size_t pairs = 0;
  for (; pairs < 120 && run.ok(); ++pairs) {
    NcSeries<RationalField> A(q, W);
    NcSeries<RationalField> B(q, W);
    for (const Word& w : words_up_to_weight(W)) {
      if (w.depth() == 0 && !w.empty()) {
        continue;
      }
      if (keep(rng)) {
        A.set(w, random_rational(rng));
      }
      if (w.depth() > 0 && keep(rng)) {
        B.set(w, random_rational(rng));
      }
    }
    auto fast = substitute(A, B);
    auto slow = substitute_by_expansion(A, B);
    for (const Word& w : words_up_to_weight(W)) {
      run.check(fast[w] == slow[w], [&] {
        return "pair " + std::to_string(pairs) + ", word " + w.str() + ": " + str(fast[w]) + " vs " + str(slow[w]);
      });
    }
  }
  return run.finish(std::to_string(pairs) + " random pairs");
}

SuiteResult suite_triangle_op(const SuiteConfig& c) {
  Run run("prop-sec2",
          "triangle_op(P, G_reg, Li1p) equals the engine's triangle coefficient at every word of weight <= 4, "
          "z-order <= 20, exact");
  std::mt19937_64 rng(c.seed);
  const std::size_t W = 4;
  const std::size_t order = 20;
  RationalField q;
  for (long p : {3L, 5L}) {
    for (int trial = 0; trial < 2 && run.ok(); ++trial) {
      auto P = random_grouplike(rng, W);
      auto g = is_grouplike(P);
      run.check(g.grouplike, [&] { return std::string("synthetic P is not group-like"); });
      auto conj = conjugate_e1(P);
      TriangleEvaluator<RationalField> ev(q, p, [&](const Word& w) {
        Rational v = conj[w];
        return (w.depth() - 1) % 2 == 0 ? v : Rational(-v);
      });
      ev.reserve(order);
      auto L = regularized_polylog_series(W, order);
      auto L1 = li1p_series(q, order, p);
      auto R = triangle_op(P, L, L1, p, order);

      std::map<Word, std::vector<Rational>> index_part;
      for (const Index& idx : indices_up_to_weight(static_cast<int>(W))) {
        std::vector<Rational> s(order + 1);
        for (std::size_t m = 0; m <= order; ++m) {
          s[m] = ev.coefficient(idx, m);
        }
        index_part.emplace(index_to_word(idx), std::move(s));
      }
      auto full = extend_by_shuffle(index_part, L1.coefficients(), W);
      for (const Word& w : words_up_to_weight(W)) {
        const auto& expect = full.at(w);
        for (std::size_t m = 0; m <= order; ++m) {
          run.check(R[w][m] == expect[m], [&] {
            return "p=" + std::to_string(p) + " word " + (w.empty() ? std::string("()") : w.str()) +
                   " z^" + std::to_string(m) + ": triangle_op " + str(R[w][m]) + " vs engine " + str(expect[m]);
          });
        }
      }
    }
  }
  return run.finish("p in {3,5}, two synthetic P each");
}

SuiteResult suite_transforms(const SuiteConfig& c) {
  Run run("transforms",
          "mobius_transform is an involution and matches its binomial form; reciprocal formula for weight <= 6, "
          "m <= 30; exact");
  std::mt19937_64 rng(c.seed);
  RationalField q;
  std::uniform_int_distribution<int> len(1, 30);
  for (int t = 0; t < 60; ++t) {
    std::vector<Rational> a(static_cast<std::size_t>(len(rng)) + 1);
    for (std::size_t k = 1; k < a.size(); ++k) {
      a[k] = random_rational(rng);
    }
    auto b = mobius_transform(q, a);
    auto back = mobius_transform(q, b);
    run.check(back == a, [&] { return "involution fails on sequence " + std::to_string(t); });
    run.check(b == mobius_transform_binomial(q, a),
              [&] { return "Horner and binomial forms disagree on sequence " + std::to_string(t); });
  }
  for (const Index& idx : indices_up_to_weight(6)) {
    for (long m = 1; m <= 30; ++m) {
      run.check(reciprocal_check(idx, m),
                [&] { return "reciprocal formula fails at (" + format_index(idx) + "), m=" + std::to_string(m); });
    }
  }
  return run.finish();
}

SuiteResult suite_bmhs(const SuiteConfig& c) {
  Run run("bmhs", "h^B_(1)(m) = -1/m and h^B_(2)(m) = -1/m^2 - h_1(m)/m for m <= 50; backends agree; exact");
  for (long m = 1; m <= 50; ++m) {
    Rational one = bmhs({1}, m);
    Rational two = bmhs({2}, m);
    Rational want1(-1, m);
    Rational want2 = Rational(-1, m * m) - mhs({1}, m) / Rational(m);
    want2.canonicalize();
    run.check(one == want1, [&] { return "h^B_(1)(" + std::to_string(m) + ") = " + str(one); });
    run.check(two == want2, [&] { return "h^B_(2)(" + std::to_string(m) + ") = " + str(two); });
  }
  RationalField q;
  PadicField f{c.p, 30};
  const std::size_t M = 20;
  for (const Word& w : words_up_to_weight(5)) {
    auto table = bmhs_table(q, w, M);
    auto ptable = bmhs_table(f, w, M);
    for (std::size_t m = 0; m <= M; ++m) {
      Rational def = bmhs_word(w, static_cast<long>(m));
      run.check(table[m] == def, [&] { return "table vs definition at " + w.str() + ", m=" + std::to_string(m); });
      run.check(bmhs_value(q, w, m) == def,
                [&] { return "pointwise vs definition at " + w.str() + ", m=" + std::to_string(m); });
      Padic reduced = f.from_rational(def);
      run.check(ptable[m] == reduced,
                [&] { return "p-adic vs rational at " + w.str() + ", m=" + std::to_string(m); });
    }
  }
  return run.finish();
}

SuiteResult suite_examples(const SuiteConfig& c) {
  Run run("examples",
          "example_depth1_sum and example_depth2_sum equal theorem_partial_sum for weight <= 5, m <= 2p^2, "
          "p in {3,5}");
  std::mt19937_64 rng(c.seed);
  long worst = Padic::kExact;
  for (long p : {3L, 5L}) {
    const std::size_t mmax = static_cast<std::size_t>(2 * p * p);
    // exact backend over a random table
    {
      auto table = random_rational_table(rng, 4);
      AdjointCache<RationalField> ad(table);
      TriangleEvaluator<RationalField> ev(RationalField{}, p, [&](const Word& w) { return ad(w); });
      ev.reserve(mmax);
      auto zeta1 = [&](int n) { return table.at({n}); };
      for (std::size_t m = 1; m <= mmax && run.ok(); ++m) {
        for (int n = 1; n <= 5; ++n) {
          Rational a = example_depth1_sum(RationalField{}, n, m, p);
          Rational b = theorem_partial_sum(ev, {n}, m);
          run.check(a == b, [&] {
            return "rational p=" + std::to_string(p) + " (" + std::to_string(n) + ") m=" + std::to_string(m);
          });
        }
        for (int n1 = 1; n1 <= 4; ++n1) {
          for (int n2 = 1; n1 + n2 <= 5; ++n2) {
            Rational a = example_depth2_sum<RationalField>(RationalField{}, n1, n2, m, p, zeta1);
            Rational b = theorem_partial_sum(ev, {n1, n2}, m);
            run.check(a == b, [&] {
              return "rational p=" + std::to_string(p) + " (" + std::to_string(n1) + "," + std::to_string(n2) +
                     ") m=" + std::to_string(m) + ": " + str(a) + " vs " + str(b);
            });
          }
        }
      }
    }
    // p-adic backend over computed depth-one values
    {
      TableOptions o = table_options(c, p, 4);
      o.levels_by_depth = {{1, default_n_max(p)}};
      auto built = build_table(o);
      const PadicField& field = built.table.field();
      AdjointCache<PadicField> ad(built.table);
      TriangleEvaluator<PadicField> ev(field, p, [&](const Word& w) { return ad(w); });
      ev.reserve(mmax);
      auto zeta1 = [&](int n) { return built.table.at({n}); };
      auto compare = [&](const Padic& a, const Padic& b, const std::string& where) {
        Padic d = a - b;
        worst = std::min(worst, d.absolute_precision());
        run.check(d.is_zero() && d.absolute_precision() >= 4, [&] {
          return "p-adic " + where + ": " + str(a) + " vs " + str(b);
        });
      };
      for (std::size_t m = 1; m <= mmax && run.ok(); ++m) {
        for (int n = 1; n <= 5; ++n) {
          compare(example_depth1_sum(field, n, m, p), theorem_partial_sum(ev, {n}, m),
                  "p=" + std::to_string(p) + " (" + std::to_string(n) + ") m=" + std::to_string(m));
        }
        for (int n1 = 1; n1 <= 4; ++n1) {
          for (int n2 = 1; n1 + n2 <= 5; ++n2) {
            compare(example_depth2_sum<PadicField>(field, n1, n2, m, p, zeta1), theorem_partial_sum(ev, {n1, n2}, m),
                    "p=" + std::to_string(p) + " (" + std::to_string(n1) + "," + std::to_string(n2) +
                        ") m=" + std::to_string(m));
          }
        }
      }
    }
  }
  return run.finish("p-adic agreement to at least " + std::to_string(worst) + " digits");
}

SuiteResult suite_adjoint(const SuiteConfig& c) {
  Run run("adjoint", "closed adjoint formula equals (-1)^{dp-1} (Phi^{-1} e1 Phi)_w for all words of weight <= 5");
  std::mt19937_64 rng(c.seed);
  const std::size_t W = 5;
  {
    auto table = random_rational_table(rng, 4);
    for (const Word& w : words_up_to_weight(W)) {
      Rational a = adjoint_mzv(w, table);
      Rational b = adjoint_mzv_via_conjugation(w, table);
      run.check(a == b, [&] { return "rational table, word " + w.str() + ": " + str(a) + " vs " + str(b); });
    }
  }
  long worst = Padic::kExact;
  {
    auto built = build_table(table_options(c, c.p, 4));
    for (const Word& w : words_up_to_weight(W)) {
      Padic a = adjoint_mzv(w, built.table);
      Padic b = adjoint_mzv_via_conjugation(w, built.table);
      Padic d = a - b;
      worst = std::min(worst, d.absolute_precision());
      run.check(d.is_zero() && d.absolute_precision() >= 4, [&] {
        return "p=" + std::to_string(c.p) + " word " + w.str() + ": " + str(a) + " vs " + str(b);
      });
    }
  }
  return run.finish("p-adic agreement to at least " + std::to_string(worst) + " digits");
}

SuiteResult suite_even_zeta(const SuiteConfig& c) {
  Run run("even-zeta", "zeta_5(2), zeta_5(4) (N_max=3) and zeta_3(2) (N_max=4) vanish to >= 3 certified digits");
  std::ostringstream summary;
  struct Case {
    long p;
    int n;
    long n_max;
  };
  for (Case k : {Case{5, 2, 3}, Case{5, 4, 3}, Case{3, 2, 4}}) {
    TableOptions o = table_options(c, k.p, k.n);
    o.n_max = k.n_max;
    o.levels_by_depth.clear();
    try {
      LimitReport r = compute_mzv({k.n}, o);
      summary << describe_levels(r) << "; ";
      run.check(r.certified_precision >= 3 && r.value.is_zero(), [&] { return describe_levels(r); });
    } catch (const DivergenceError& e) {
      run.check(false, [&] { return std::string(e.what()); });
    }
  }
  return run.finish(summary.str());
}

SuiteResult suite_shuffle(const SuiteConfig& c) {
  Run run("shuffle", "assembled Phi is group-like within certified precision: P_{u sh v} = P_u P_v, wt u + wt v <= W");
  try {
    auto built = build_table(table_options(c, c.p, c.weight));
    auto phi = phi_from_table(built.table, static_cast<std::size_t>(c.weight));
    auto sc = shuffle_check(phi);
    run.result.checks = sc.report.pairs_checked;
    if (!sc.report.grouplike) {
      run.fail("fails at pair (" + sc.report.witness->first.str() + ", " + sc.report.witness->second.str() + ")");
    } else if (sc.min_precision < 1) {
      run.fail("vacuous: some pair is only known to " + std::to_string(sc.min_precision) + " digits");
    }
    std::ostringstream os;
    os << "p=" << c.p << " W=" << c.weight << ": " << sc.report.pairs_checked << " pairs, each to at least "
       << sc.min_precision << " digits, table built in " << built.seconds << " s";
    return run.finish(os.str());
  } catch (const DivergenceError& e) {
    run.fail(e.what());
    return run.finish();
  }
}

SuiteResult suite_convergence(const SuiteConfig& c) {
  Run run("convergence", "v_p(S(p^{N+1}) - S(p^N)) is nondecreasing for (2), (3), (1,2) at p = 5");
  std::ostringstream summary;
  for (const Index& idx : {Index{2}, Index{3}, Index{1, 2}}) {
    TableOptions o = table_options(c, 5, index_weight(idx));
    o.n_max = 3;
    o.levels_by_depth.clear();
    try {
      LimitReport r = compute_mzv(idx, o);
      summary << describe_levels(r) << "; ";
      bool monotone = std::is_sorted(r.convergence.begin(), r.convergence.end());
      run.check(monotone, [&] { return describe_levels(r); });
    } catch (const DivergenceError& e) {
      run.check(false, [&] { return std::string(e.what()); });
    }
  }
  return run.finish(summary.str());
}

SuiteResult suite_exact_identity(const SuiteConfig&) {
  Run run("exact-identity", "theorem_partial_sum((1), p^N) = 0 exactly for N <= N_max, p in {2,3,5}");
  MzvTable<RationalField> empty(RationalField{}, 0);
  AdjointCache<RationalField> ad(empty);
  for (long p : {2L, 3L, 5L}) {
    TriangleEvaluator<RationalField> ev(RationalField{}, p, [&](const Word& w) { return ad(w); });
    std::size_t m = 1;
    for (long N = 1; N <= default_n_max(p); ++N) {
      m *= static_cast<std::size_t>(p);
      for (SignConvention s : {SignConvention::mahler, SignConvention::literal}) {
        Rational v = theorem_partial_sum(ev, {1}, m, s);
        run.check(v == 0, [&] { return "p=" + std::to_string(p) + " N=" + std::to_string(N) + ": " + str(v); });
      }
    }
  }
  return run.finish();
}

SuiteResult suite_segments(const SuiteConfig&) {
  Run run("segments", "e1-segment enumeration equals brute force over position labels, weight <= 8");
  for (const Word& w : words_up_to_weight(8)) {
    if (w.depth() == 0) {
      run.check(enumerate_e1_segments(w).empty(), [&] { return "depth-0 word " + w.str() + " has decompositions"; });
      continue;
    }
    auto fast = enumerate_e1_segments(w);
    auto slow = brute_force_segments(w);
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> a;
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> b;
    for (const auto& d : fast) {
      std::vector<std::pair<std::size_t, std::size_t>> v;
      for (const Segment& s : d) {
        v.emplace_back(s.start, s.end);
      }
      a.insert(v);
    }
    for (const auto& d : slow) {
      std::vector<std::pair<std::size_t, std::size_t>> v;
      for (const Segment& s : d) {
        v.emplace_back(s.start, s.end);
      }
      b.insert(v);
    }
    run.check(a == b && fast.size() == a.size(), [&] {
      return "word " + w.str() + ": " + std::to_string(fast.size()) + " enumerated vs " + std::to_string(slow.size());
    });
  }
  return run.finish();
}

SuiteResult suite_compositions(const SuiteConfig&) {
  Run run("compositions", "restricted_composition_sum equals composition enumeration, b <= 4, l <= 12, p in {2,3,5}");
  for (long p : {2L, 3L, 5L}) {
    for (long b = 0; b <= 4; ++b) {
      for (long l = 0; l <= 12; ++l) {
        Rational a = restricted_composition_sum(b, l, p);
        Rational e = composition_enumeration(b, l, p);
        run.check(a == e, [&] {
          return "b=" + std::to_string(b) + " l=" + std::to_string(l) + " p=" + std::to_string(p) + ": " + str(a) +
                 " vs " + str(e);
        });
      }
    }
  }
  return run.finish();
}

SuiteResult suite_antipode(const SuiteConfig& c) {
  Run run("antipode", "antipode inverse equals the geometric-series inverse on group-like series");
  std::mt19937_64 rng(c.seed);
  for (int t = 0; t < 10; ++t) {
    auto P = random_grouplike(rng, 5);
    auto a = grouplike_inverse(P);
    auto b = unipotent_inverse(P);
    for (const Word& w : words_up_to_weight(5)) {
      run.check(a[w] == b[w], [&] { return "trial " + std::to_string(t) + " word " + w.str(); });
    }
    auto one = nc_mul(P, a);
    for (const Word& w : words_up_to_weight(5)) {
      run.check(one[w] == (w.empty() ? 1 : 0), [&] { return "P P^{-1} != 1 at " + w.str(); });
    }
  }
  return run.finish();
}

SuiteResult suite_depth_access(const SuiteConfig& c) {
  Run run("depth-access", "depth-d partial sums read only depth <= d-1 table entries");
  auto built = build_table(table_options(c, c.p, c.weight));
  MzvTable<PadicField> table = built.table;
  table.enable_access_log();
  AdjointCache<PadicField> ad(table);
  TriangleEvaluator<PadicField> ev(table.field(), c.p, [&](const Word& w) { return ad(w); });
  const std::size_t m = static_cast<std::size_t>(c.p * c.p);
  ev.reserve(m);
  for (const Index& idx : indices_up_to_weight(c.weight)) {
    table.clear_access_log();
    AdjointCache<PadicField> fresh(table);
    TriangleEvaluator<PadicField> e(table.field(), c.p, [&](const Word& w) { return fresh(w); });
    theorem_partial_sum(e, idx, m);
    for (const Index& read : table.access_log()) {
      run.check(read.size() < idx.size(),
                [&] { return "zeta(" + format_index(idx) + ") read zeta(" + format_index(read) + ")"; });
    }
  }
  return run.finish();
}

SuiteResult suite_sign(const SuiteConfig& c) {
  Run run("sign", "the mahler sign makes Phi group-like at weight 4 and literal does not, for p in {3,5,7}");
  std::ostringstream summary;
  for (long p : {3L, 5L, 7L}) {
    for (SignConvention s : {SignConvention::mahler, SignConvention::literal}) {
      TableOptions o = table_options(c, p, 4);
      o.sign = s;
      bool grouplike = false;
      try {
        auto built = build_table(o);
        auto sc = shuffle_check(phi_from_table(built.table, 4));
        grouplike = sc.report.grouplike && sc.min_precision >= 1;
      } catch (const DivergenceError&) {
        grouplike = false;
      }
      summary << "p=" << p << " " << to_string(s) << ": " << (grouplike ? "group-like" : "not group-like") << "; ";
      bool expected = s == SignConvention::mahler;
      run.check(grouplike == expected, [&] {
        return "p=" + std::to_string(p) + " " + to_string(s) + (grouplike ? " is" : " is not") + " group-like";
      });
    }
  }
  return run.finish(summary.str());
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

NcSeries<RationalField> substitute_by_expansion(const NcSeries<RationalField>& A, const NcSeries<RationalField>& B) {
  const std::size_t W = A.weight_cap();
  NcSeries<RationalField> out(A.ring(), W);
  for (const auto& [v, a] : A) {
    std::map<Word, Rational> cur{{Word(), a}};
    for (std::size_t i = 0; i < v.weight(); ++i) {
      std::map<Word, Rational> next;
      for (const auto& [u, cu] : cur) {
        if (v[i] == Letter::e0) {
          if (u.weight() + 1 <= W) {
            next[u + Word::letter(Letter::e0)] += cu;
          }
          continue;
        }
        for (const auto& [bw, bc] : B) {
          if (u.weight() + bw.weight() <= W) {
            next[u + bw] += cu * bc;
          }
        }
      }
      cur = std::move(next);
    }
    for (const auto& [u, cu] : cur) {
      out.add(u, cu);
    }
  }
  return out;
}

namespace {

bool is_lyndon(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.substr(i) <= s) {
      return false;
    }
  }
  return true;
}

NcSeries<RationalField> bracket(const std::string& s, std::size_t W) {
  RationalField q;
  if (s.size() == 1) {
    return NcSeries<RationalField>::letter(q, W, s[0] == '0' ? Letter::e0 : Letter::e1);
  }
  // standard factorization: longest proper Lyndon suffix
  std::size_t split = s.size() - 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (is_lyndon(s.substr(i))) {
      split = i;
      break;
    }
  }
  auto u = bracket(s.substr(0, split), W);
  auto v = bracket(s.substr(split), W);
  return nc_mul(u, v) - nc_mul(v, u);
}

}  // namespace

NcSeries<RationalField> random_grouplike(std::mt19937_64& rng, std::size_t W) {
  RationalField q;
  NcSeries<RationalField> lie(q, W);
  for (std::size_t n = 2; n <= W; ++n) {
    for (const Word& w : words_of_weight(n)) {
      if (is_lyndon(w.str())) {
        auto b = bracket(w.str(), W);
        Rational c = random_rational(rng);
        lie = lie + b.map_coefficients([&](const Word&, const Rational& x) { return Rational(x * c); });
      }
    }
  }
  auto result = NcSeries<RationalField>::one(q, W);
  auto term = result;
  for (std::size_t k = 1; k <= W; ++k) {
    term = nc_mul(term, lie).map_coefficients(
        [&](const Word&, const Rational& x) { return Rational(x / Rational(static_cast<long>(k))); });
    result = result + term;
  }
  return result;
}

std::vector<SegmentDecomposition> brute_force_segments(const Word& w) {
  // label 0: gap, 1: starts a segment, 2: continues the current segment
  const std::size_t n = w.weight();
  std::vector<SegmentDecomposition> out;
  std::vector<int> label(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= 3;
  }
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (std::size_t i = 0; i < n; ++i) {
      label[i] = static_cast<int>(x % 3);
      x /= 3;
    }
    bool valid = true;
    SegmentDecomposition segs;
    for (std::size_t i = 0; i < n && valid; ++i) {
      if (label[i] == 0) {
        valid = w[i] == Letter::e0;
      } else if (label[i] == 1) {
        segs.push_back({i, i + 1});
      } else {
        valid = i > 0 && label[i - 1] != 0;
        if (valid) {
          segs.back().end = i + 1;
        }
      }
    }
    for (const Segment& s : segs) {
      if (!valid) {
        break;
      }
      valid = w.subword(s.start, s.end).depth() > 0;
    }
    if (valid) {
      out.push_back(segs);
    }
  }
  return out;
}

Rational composition_enumeration(long b, long l, long p) {
  if (b == 0) {
    return l == 0 ? 1 : 0;
  }
  Rational total = 0;
  std::vector<long> parts(static_cast<std::size_t>(b), 1);
  std::function<void(std::size_t, long, Rational)> rec = [&](std::size_t i, long left, Rational acc) {
    if (i + 1 == parts.size()) {
      if (left >= 1 && left % p != 0) {
        total += acc / Rational(left);
      }
      return;
    }
    for (long k = 1; k <= left; ++k) {
      if (k % p != 0) {
        rec(i + 1, left - k, acc / Rational(k));
      }
    }
  };
  rec(0, l, Rational(1));
  Integer fact = 1;
  for (long k = 2; k <= b; ++k) {
    fact *= k;
  }
  total /= Rational(fact);
  total.canonicalize();
  return total;
}

NcSeries<ZSeriesRing<RationalField>> regularized_polylog_series(std::size_t W, std::size_t order) {
  RationalField q;
  ZSeriesRing<RationalField> ring{q, order};
  NcSeries<ZSeriesRing<RationalField>> L(ring, W);
  L.set(Word(), ring.one());
  for (const Word& w : words_up_to_weight(W)) {
    if (w.depth() == 0) {
      continue;
    }
    std::vector<Rational> c(order + 1);
    if (w.ends_with_e1()) {
      c = polylog_coefficients(q, word_to_index(w), order);
    } else {
      for (const auto& [k, ext] : e0_extension_terms(w)) {
        auto a = polylog_coefficients(q, ext, order);
        for (std::size_t i = 0; i <= order; ++i) {
          c[i] += Rational(k) * a[i];
        }
      }
    }
    if (w.depth() % 2 == 1) {
      for (auto& x : c) {
        x = -x;
      }
    }
    L.set(w, TruncatedZSeries<RationalField>(q, c));
  }
  return L;
}

std::map<Word, std::vector<Rational>> extend_by_shuffle(const std::map<Word, std::vector<Rational>>& index_part,
                                                        const std::vector<Rational>& L1, std::size_t W) {
  const std::size_t order = L1.size() - 1;
  RationalField q;
  std::map<Word, std::vector<Rational>> memo;
  std::function<const std::vector<Rational>&(const Word&)> get = [&](const Word& w) -> const std::vector<Rational>& {
    auto it = memo.find(w);
    if (it != memo.end()) {
      return it->second;
    }
    std::vector<Rational> r(order + 1);
    if (w.empty()) {
      r[0] = 1;
    } else if (w.ends_with_e1()) {
      r = index_part.at(w);
    } else {
      Word v = w.subword(0, w.weight() - 1);
      r = cauchy_product(q, get(v), L1, order);
      Rational self = 0;
      for (const auto& [x, cx] : shuffle(v, Word::letter(Letter::e0))) {
        if (x == w) {
          self = cx;
          continue;
        }
        const auto& rx = get(x);
        for (std::size_t i = 0; i <= order; ++i) {
          r[i] -= cx * rx[i];
        }
      }
      for (auto& x : r) {
        x /= self;
      }
    }
    return memo.emplace(w, std::move(r)).first->second;
  };
  for (const Word& w : words_up_to_weight(W)) {
    get(w);
  }
  return memo;
}

ShuffleCheck shuffle_check(const NcSeries<PadicField>& P) {
  ShuffleCheck out;
  const auto& field = P.ring();
  if (!is_unipotent(P)) {
    out.report.grouplike = false;
    out.report.witness = std::make_pair(Word(), Word());
    return out;
  }
  auto words = words_up_to_weight(P.weight_cap());
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (u.empty() || v.empty() || v < u || u.weight() + v.weight() > P.weight_cap()) {
        continue;
      }
      Padic lhs = field.zero();
      for (const auto& [w, c] : shuffle(u, v)) {
        lhs = lhs + field.from_rational(c) * P[w];
      }
      Padic d = lhs - P[u] * P[v];
      ++out.report.pairs_checked;
      if (!d.is_zero()) {
        out.report.grouplike = false;
        out.report.witness = std::make_pair(u, v);
        return out;
      }
      out.min_precision = std::min(out.min_precision, d.absolute_precision());
    }
  }
  return out;
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = [] {
    std::vector<SuiteInfo> r;
    auto add = [&](const std::string& name, std::function<SuiteResult(const SuiteConfig&)> fn) {
      r.push_back({name, std::move(fn)});
    };
    add("contraction", suite_contraction);
    add("prop-sec2", suite_triangle_op);
    add("transforms", suite_transforms);
    add("bmhs", suite_bmhs);
    add("examples", suite_examples);
    add("adjoint", suite_adjoint);
    add("even-zeta", suite_even_zeta);
    add("shuffle", suite_shuffle);
    add("convergence", suite_convergence);
    add("exact-identity", suite_exact_identity);
    add("segments", suite_segments);
    add("compositions", suite_compositions);
    add("antipode", suite_antipode);
    add("depth-access", suite_depth_access);
    add("sign", suite_sign);
    return r;
  }();
  return registry;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& s : suite_registry()) {
    if (s.name == name) {
      return s.run(config);
    }
  }
  std::string known;
  for (const auto& s : suite_registry()) {
    known += (known.empty() ? "" : ", ") + s.name;
  }
  throw std::invalid_argument("unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace pmzv
