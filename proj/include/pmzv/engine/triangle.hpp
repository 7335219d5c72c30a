#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "pmzv/adjoint/adjoint.hpp"
#include "pmzv/harmonic/harmonic.hpp"
#include "pmzv/words/segments.hpp"
#include "pmzv/zseries/series.hpp"

namespace pmzv {

// Overall sign of the partial sums.
//   mahler:  zeta = (-1)^d (a_0 - lim T) with T the triangle coefficient
//   literal: zeta = (-1)^d lim T
enum class SignConvention { mahler, literal };

const char* to_string(SignConvention s);
SignConvention parse_sign_convention(const std::string& text);

// Coefficients of Li1p^b / b!, shared across evaluations.
template <CoefficientField F>
class RestrictedLogPowers {
 public:
  using V = typename F::value_type;
  using Table = std::shared_ptr<const std::vector<V>>;

  RestrictedLogPowers(F field, long p) : field_(field), p_(p) {}

  Table get(long b, std::size_t order) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& row = rows_[b];
    if (!row || row->size() < order + 1) {
      auto s = series_power_over_factorial(li1p_series(field_, order, p_), b);
      row = std::make_shared<const std::vector<V>>(s.coefficients());
    }
    return row;
  }

 private:
  F field_;
  long p_;
  std::mutex mutex_;
  std::map<long, Table> rows_;
};

// Coefficient of z^l in Li1p^b / b!, i.e. the sum over compositions of l into b
// parts prime to p of 1/(b! i_1 ... i_b).
Rational restricted_composition_sum(long b, long l, long p);

// out[t] = sum_i a[i] b[t-i] for t in targets.
template <CoefficientField F>
std::vector<typename F::value_type> convolve_at(const F& field, const std::vector<typename F::value_type>& a,
                                                const std::vector<typename F::value_type>& b,
                                                const std::vector<std::size_t>& targets, std::size_t size) {
  std::vector<typename F::value_type> out(size, field.zero());
  for (std::size_t t : targets) {
    auto acc = field.zero();
    for (std::size_t i = 0; i <= t && i < a.size(); ++i) {
      if (t - i < b.size() && !is_exact_zero(field, a[i])) {
        acc = acc + a[i] * b[t - i];
      }
    }
    out[t] = acc;
  }
  return out;
}

std::vector<Padic> convolve_at(const PadicField& field, const std::vector<Padic>& a, const std::vector<Padic>& b,
                               const std::vector<std::size_t>& targets, std::size_t size);

// Coefficient at z^m of (Phi > (G_reg, Li1p)) at an index word: the triple
// sum over d', (a, b), (i, l, j) with i + l + p j = m, with adjoint values
// supplied by `adjoint`.
template <CoefficientField F>
class TriangleEvaluator {
 public:
  using V = typename F::value_type;
  using AdjointFn = std::function<V(const Word&)>;

  TriangleEvaluator(F field, long p, AdjointFn adjoint)
      : field_(field),
        p_(p),
        adjoint_(std::move(adjoint)),
        bmhs_(std::make_shared<BmhsCache<F>>(field)),
        logs_(std::make_shared<RestrictedLogPowers<F>>(field, p)) {}

  TriangleEvaluator(F field, long p, AdjointFn adjoint, std::shared_ptr<BmhsCache<F>> bmhs,
                    std::shared_ptr<RestrictedLogPowers<F>> logs)
      : field_(field), p_(p), adjoint_(std::move(adjoint)), bmhs_(std::move(bmhs)), logs_(std::move(logs)) {}

  const F& field() const { return field_; }
  long prime() const { return p_; }
  BmhsCache<F>& bmhs() { return *bmhs_; }

  // Tables are built once at this bound so later, smaller m reuse them.
  void reserve(std::size_t M) { bound_ = std::max(bound_, M); }

  V coefficient(const Index& idx, std::size_t m) {
    validate(idx);
    const std::size_t d = idx.size();
    const std::size_t p = static_cast<std::size_t>(p_);
    const Word w = index_to_word(idx);
    V total = bmhs_value(field_, w, m);
    if (d % 2 == 1) {
      total = -total;
    }
    if (m == 0) {
      return total;
    }
    const std::size_t mp = m / p;
    std::vector<std::size_t> targets;
    for (std::size_t j = 0; j <= mp; ++j) {
      targets.push_back(m - p * j);
    }
    const std::size_t big = std::max(bound_, m);
    for (std::size_t dp = 1; dp <= d; ++dp) {
      const int n_dp = idx[dp - 1];
      const Word prefix = dp < d ? index_to_word(Index(idx.begin() + static_cast<std::ptrdiff_t>(dp), idx.end())) : Word();
      const Word base = index_to_word(Index(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(dp - 1)));
      for (int a = 0; a < n_dp; ++a) {
        if (prefix.empty() && a > 0) {
          continue;  // h^B of e0^a vanishes except at a = i = 0
        }
        for (int b = 0; a + b < n_dp; ++b) {
          auto cb = logs_->get(b, big);
          std::vector<V> conv;
          if (prefix.empty()) {
            conv = *cb;
          } else {
            auto left = bmhs_->get(prefix + Word::e0_power(static_cast<std::size_t>(a)), big);
            conv = convolve_at(field_, *left, *cb, targets, m + 1);
          }
          const Word w3 = Word::e0_power(static_cast<std::size_t>(n_dp - 1 - a - b)) + Word::letter(Letter::e1) + base;
          for (const auto& [cw, coef] : contraction_weights(w3, d - dp)) {
            auto ht = bmhs_->get(cw, std::max(bound_ / p, mp));
            V s = field_.zero();
            for (std::size_t j = 0; j <= mp; ++j) {
              if (!is_exact_zero(field_, (*ht)[j])) {
                s = s + conv[m - p * j] * (*ht)[j];
              }
            }
            total = total + coef * s;
          }
        }
      }
    }
    return total;
  }

 private:
  static void validate(const Index& idx) {
    if (idx.empty()) {
      throw std::invalid_argument("empty index");
    }
    for (int n : idx) {
      if (n < 1) {
        throw std::invalid_argument("index entries must be >= 1");
      }
    }
  }

  // Groups the e1-segment decompositions of w3^rev by contraction. Each
  // carries (-1)^{wt w3 + d - d' + r} p^{-(wt w3 - sum(wt w_k - 1))} prod B_{w_k},
  // with B = (-1)^{dp - 1} Ad.
  std::map<Word, V> contraction_weights(const Word& w3, std::size_t d_minus_dp) {
    std::map<Word, V> out;
    const Word rev = w3.reversed();
    for (const auto& segs : enumerate_e1_segments(rev)) {
      V prod = field_.one();
      bool vanished = false;
      int sign_exp = static_cast<int>(w3.weight() + d_minus_dp + segs.size());
      for (const Segment& s : segs) {
        Word piece = rev.subword(s.start, s.end);
        V ad = adjoint_(piece);
        if (is_exact_zero(field_, ad)) {
          vanished = true;
          break;
        }
        sign_exp += static_cast<int>(piece.depth() - 1);
        prod = prod * ad;
      }
      if (vanished) {
        continue;
      }
      long e = static_cast<long>(w3.weight() - contracted_weight_loss(segs));
      Rational k(Integer(sign_exp % 2 == 0 ? 1 : -1), Integer(prime_power(p_, e)));
      V term = field_.from_rational(k) * prod;
      Word cw = contract(rev, segs);
      auto it = out.find(cw);
      if (it == out.end()) {
        out.emplace(cw, term);
      } else {
        it->second = it->second + term;
      }
    }
    return out;
  }

  F field_;
  long p_;
  AdjointFn adjoint_;
  std::shared_ptr<BmhsCache<F>> bmhs_;
  std::shared_ptr<RestrictedLogPowers<F>> logs_;
  std::size_t bound_ = 0;
};

// Limit summand: (-1)^{d+1} T(m) for mahler, (-1)^d T(m) for literal.
template <CoefficientField F>
typename F::value_type theorem_partial_sum(TriangleEvaluator<F>& ev, const Index& idx, std::size_t m,
                                           SignConvention sign = SignConvention::mahler) {
  auto t = ev.coefficient(idx, m);
  bool flip = (sign == SignConvention::mahler) ? (idx.size() % 2 == 0) : (idx.size() % 2 == 1);
  return flip ? typename F::value_type(-t) : t;
}

// Depth one, written out: -[h^B_{e0^{n-1}e1}(m)
//   + sum_b sum_{l+pj=m} c_b(l) (-1/p)^{n-b} h^B_{e1 e0^{n-1-b}}(j)].
template <CoefficientField F>
typename F::value_type example_depth1_sum(const F& field, int n, std::size_t m, long p) {
  using V = typename F::value_type;
  const std::size_t pp = static_cast<std::size_t>(p);
  V inner = bmhs_value(field, index_to_word({n}), m);
  for (int b = 0; b <= n - 1; ++b) {
    auto cb = series_power_over_factorial(li1p_series(field, m, p), b);
    Word tail = Word::letter(Letter::e1) + Word::e0_power(static_cast<std::size_t>(n - 1 - b));
    auto h = bmhs_table(field, tail, m / pp);
    Rational k(Integer((n - b) % 2 == 0 ? 1 : -1), Integer(prime_power(p, n - b)));
    V s = field.zero();
    for (std::size_t j = 0; pp * j <= m; ++j) {
      s = s + cb[m - pp * j] * h[j];
    }
    inner = inner + field.from_rational(k) * s;
  }
  return -inner;
}

// Depth two, written out from the two segment types. zeta1 supplies depth-one values.
template <CoefficientField F>
typename F::value_type example_depth2_sum(const F& field, int n1, int n2, std::size_t m, long p,
                                          const std::function<typename F::value_type(int)>& zeta1) {
  using V = typename F::value_type;
  const std::size_t pp = static_cast<std::size_t>(p);
  auto e1 = Word::letter(Letter::e1);
  auto e0 = [](int k) { return Word::e0_power(static_cast<std::size_t>(k)); };
  auto pw = [&](int sign_exp, long e) {
    return field.from_rational(Rational(Integer(sign_exp % 2 == 0 ? 1 : -1), Integer(prime_power(p, e))));
  };
  // Ad(e1 e0^{n1-1} e1 e0^q)
  auto ad = [&](int q) -> V {
    if (q > 0) {
      return field.from_integer(binomial_negative(n1, q)) * zeta1(n1 + q);
    }
    return field.from_integer(n1 % 2 == 0 ? 2 : 0) * zeta1(n1);
  };

  V inner = bmhs_value(field, index_to_word({n1, n2}), m);
  // d' = 1
  for (int a = 0; a <= n1 - 1; ++a) {
    auto left = bmhs_table(field, e0(n2 - 1) + e1 + e0(a), m);
    for (int b = 0; a + b <= n1 - 1; ++b) {
      auto cb = series_power_over_factorial(li1p_series(field, m, p), b).coefficients();
      auto right = bmhs_table(field, e1 + e0(n1 - 1 - a - b), m / pp);
      V s = field.zero();
      for (std::size_t j = 0; pp * j <= m; ++j) {
        for (std::size_t l = 0; l + pp * j <= m; ++l) {
          s = s + left[m - l - pp * j] * cb[l] * right[j];
        }
      }
      inner = inner + pw(n1 - a - b, n1 - a - b) * s;
    }
  }
  // d' = 2
  for (int b = 0; b <= n2 - 1; ++b) {
    const int q0 = n2 - 1 - b;
    auto cb = series_power_over_factorial(li1p_series(field, m, p), b);
    V s = field.zero();
    for (std::size_t j = 0; pp * j <= m; ++j) {
      const V& c = cb[m - pp * j];
      if (is_exact_zero(field, c)) {
        continue;
      }
      V bracket = field.zero();
      for (int k = 0; k <= q0; ++k) {  // type (i)
        bracket = bracket + pw(0, k + 1) * ad(q0 - k) * bmhs_value(field, e1 + e0(k), j);
      }
      bracket = bracket + pw(0, n1 + n2 - b) * bmhs_value(field, e1 + e0(n1 - 1) + e1 + e0(q0), j);  // type (ii)
      s = s + c * bracket;
    }
    inner = inner + pw(n1 + n2 - b, 0) * s;
  }
  return -inner;
}

}  // namespace pmzv
