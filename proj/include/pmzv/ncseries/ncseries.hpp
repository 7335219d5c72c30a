#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "pmzv/words/segments.hpp"
#include "pmzv/words/shuffle.hpp"
#include "pmzv/words/word.hpp"
#include "pmzv/zseries/series.hpp"

namespace pmzv {

// Coefficient ring of a noncommutative series.
template <typename R>
concept NcRing = requires(const R& r, const typename R::value_type& a, const Integer& n) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.from_integer(n) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { a + a } -> std::convertible_to<typename R::value_type>;
  { a - a } -> std::convertible_to<typename R::value_type>;
  { a * a } -> std::convertible_to<typename R::value_type>;
  { -a } -> std::convertible_to<typename R::value_type>;
};

// Truncated z-series of a fixed order, as a coefficient ring.
template <CoefficientField F>
struct ZSeriesRing {
  using value_type = TruncatedZSeries<F>;

  F field{};
  std::size_t order = 0;

  value_type zero() const { return value_type(field, order); }
  value_type one() const { return value_type::constant(field, order, field.one()); }
  value_type from_integer(const Integer& n) const { return value_type::constant(field, order, field.from_integer(n)); }
  value_type constant(const typename F::value_type& c) const { return value_type::constant(field, order, c); }
  bool is_zero(const value_type& s) const { return s.is_zero(); }
};

// Sum of P_w w over words of weight <= W. Products truncate silently at W.
template <NcRing R>
class NcSeries {
 public:
  using value_type = typename R::value_type;
  using Map = std::map<Word, value_type>;

  NcSeries(R ring, std::size_t weight_cap = 6) : ring_(std::move(ring)), cap_(weight_cap), zero_(ring_.zero()) {}

  static NcSeries one(R ring, std::size_t weight_cap = 6) {
    NcSeries s(ring, weight_cap);
    s.set(Word(), s.ring_.one());
    return s;
  }
  static NcSeries letter(R ring, std::size_t weight_cap, Letter l) {
    NcSeries s(ring, weight_cap);
    s.set(Word::letter(l), s.ring_.one());
    return s;
  }

  const R& ring() const { return ring_; }
  std::size_t weight_cap() const { return cap_; }

  const value_type& operator[](const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? zero_ : it->second;
  }
  bool contains(const Word& w) const { return terms_.count(w) != 0; }

  // Words above the weight cap are dropped; zero coefficients are erased.
  void set(const Word& w, value_type v) {
    if (w.weight() > cap_) {
      return;
    }
    if (ring_.is_zero(v)) {
      terms_.erase(w);
    } else {
      terms_.insert_or_assign(w, std::move(v));
    }
  }
  void add(const Word& w, const value_type& v) {
    if (w.weight() > cap_) {
      return;
    }
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      set(w, v);
    } else {
      set(w, it->second + v);
    }
  }

  typename Map::const_iterator begin() const { return terms_.begin(); }
  typename Map::const_iterator end() const { return terms_.end(); }
  std::size_t support_size() const { return terms_.size(); }

  template <typename Fn>
  NcSeries map_coefficients(Fn&& fn) const {
    NcSeries out(ring_, cap_);
    for (const auto& [w, c] : terms_) {
      out.set(w, fn(w, c));
    }
    return out;
  }

  friend NcSeries operator+(const NcSeries& a, const NcSeries& b) {
    NcSeries r = a;
    for (const auto& [w, c] : b.terms_) {
      r.add(w, c);
    }
    return r;
  }
  friend NcSeries operator-(const NcSeries& a) {
    return a.map_coefficients([](const Word&, const value_type& c) { return value_type(-c); });
  }
  friend NcSeries operator-(const NcSeries& a, const NcSeries& b) { return a + (-b); }

 private:
  R ring_;
  std::size_t cap_;
  value_type zero_;
  Map terms_;
};

// (PQ)_w = sum over w = w1 w2 of P_{w1} Q_{w2}
template <NcRing R>
NcSeries<R> nc_mul(const NcSeries<R>& P, const NcSeries<R>& Q) {
  if (P.weight_cap() != Q.weight_cap()) {
    throw std::invalid_argument("nc_mul: weight caps differ");
  }
  NcSeries<R> out(P.ring(), P.weight_cap());
  for (const auto& [u, a] : P) {
    for (const auto& [v, b] : Q) {
      if (u.weight() + v.weight() <= P.weight_cap()) {
        out.add(u + v, a * b);
      }
    }
  }
  return out;
}

template <NcRing R>
bool is_unipotent(const NcSeries<R>& P) {
  return P.ring().is_zero(P[Word()] - P.ring().one());
}

// Inverse of a group-like series by transport along the antipode:
// (P^{-1})_w = (-1)^{wt w} P_{w^rev}.
template <NcRing R>
NcSeries<R> grouplike_inverse(const NcSeries<R>& P) {
  if (!is_unipotent(P)) {
    throw std::invalid_argument("not invertible as group-like: constant coefficient is not 1");
  }
  NcSeries<R> out(P.ring(), P.weight_cap());
  for (const auto& [w, c] : P) {
    SignedWord s = antipode(w);
    out.set(s.word, s.sign > 0 ? c : typename R::value_type(-c));
  }
  return out;
}

// Inverse of 1 + X as the geometric series sum (-X)^k, for any unipotent P.
template <NcRing R>
NcSeries<R> unipotent_inverse(const NcSeries<R>& P) {
  if (!is_unipotent(P)) {
    throw std::invalid_argument("not unipotent: constant coefficient is not 1");
  }
  NcSeries<R> minus_x(P.ring(), P.weight_cap());
  for (const auto& [w, c] : P) {
    if (!w.empty()) {
      minus_x.set(w, -c);
    }
  }
  NcSeries<R> result = NcSeries<R>::one(P.ring(), P.weight_cap());
  NcSeries<R> term = result;
  for (std::size_t k = 1; k <= P.weight_cap(); ++k) {
    term = nc_mul(term, minus_x);
    result = result + term;
  }
  return result;
}

struct GrouplikeReport {
  bool grouplike = true;
  std::optional<std::pair<Word, Word>> witness;
  std::size_t pairs_checked = 0;
};

// Checks P_{u sh v} = P_u P_v for all nonempty u <= v (shortlex) with
// wt u + wt v <= W, and P_empty = 1. For Padic coefficients equality is
// agreement within the operands' precision.
template <NcRing R, typename Lift>
GrouplikeReport is_grouplike(const NcSeries<R>& P, Lift&& lift_rational) {
  GrouplikeReport report;
  const auto& ring = P.ring();
  if (!is_unipotent(P)) {
    report.grouplike = false;
    report.witness = std::make_pair(Word(), Word());
    return report;
  }
  auto words = words_up_to_weight(P.weight_cap());
  for (const Word& u : words) {
    if (u.empty()) {
      continue;
    }
    for (const Word& v : words) {
      if (v.empty() || v < u || u.weight() + v.weight() > P.weight_cap()) {
        continue;
      }
      auto lhs = ring.zero();
      for (const auto& [w, c] : shuffle(u, v)) {
        lhs = lhs + lift_rational(c) * P[w];
      }
      ++report.pairs_checked;
      if (!ring.is_zero(lhs - P[u] * P[v])) {
        report.grouplike = false;
        report.witness = std::make_pair(u, v);
        return report;
      }
    }
  }
  return report;
}

template <CoefficientField F>
GrouplikeReport is_grouplike(const NcSeries<F>& P) {
  return is_grouplike(P, [&](const Rational& q) { return P.ring().from_rational(q); });
}

// A(e0, B): coefficient at w is sum over e1-segment decompositions of w of
// prod_k B_{w_k} * A_{w / (w_k)}. Requires A_{e0^n} = 0 (n >= 1) and
// B_{e0^n} = 0 (n >= 0).
template <NcRing R>
NcSeries<R> substitute(const NcSeries<R>& A, const NcSeries<R>& B) {
  const auto& ring = A.ring();
  for (const auto& [w, c] : A) {
    if (!w.empty() && w.depth() == 0 && !ring.is_zero(c)) {
      throw std::invalid_argument("substitute: A has a nonzero coefficient at e0^" + std::to_string(w.weight()));
    }
  }
  for (const auto& [w, c] : B) {
    if (w.depth() == 0 && !ring.is_zero(c)) {
      throw std::invalid_argument("substitute: B has a nonzero coefficient at a pure-e0 word");
    }
  }
  NcSeries<R> out(ring, A.weight_cap());
  out.set(Word(), A[Word()]);
  for (const Word& w : words_up_to_weight(A.weight_cap())) {
    if (w.depth() == 0) {
      continue;
    }
    auto acc = ring.zero();
    for (const auto& segs : enumerate_e1_segments(w)) {
      const auto& a = A[contract(w, segs)];
      if (ring.is_zero(a)) {
        continue;
      }
      auto prod = a;
      bool vanished = false;
      for (const Segment& s : segs) {
        const auto& b = B[w.subword(s.start, s.end)];
        if (ring.is_zero(b)) {
          vanished = true;
          break;
        }
        prod = b * prod;
      }
      if (!vanished) {
        acc = acc + prod;
      }
    }
    out.set(w, acc);
  }
  return out;
}

// P^{-1} e1 P
template <NcRing R>
NcSeries<R> conjugate_e1(const NcSeries<R>& P) {
  auto e1 = NcSeries<R>::letter(P.ring(), P.weight_cap(), Letter::e1);
  return nc_mul(grouplike_inverse(P), nc_mul(e1, P));
}

// Phi > (L, L1) = L(z/(z-1)) exp(L1 e0) [L(e0/p, B/p)(z^p/(z^p-1))]^{-1}
// with B = P^{-1} e1 P, all coefficients truncated at z^order. L must be a
// regularized group-like series (L_empty = 1, L_{e0^n} = 0); its inverse is
// taken by the antipode before substitution.
template <CoefficientField F>
NcSeries<ZSeriesRing<F>> triangle_op(const NcSeries<F>& P, const NcSeries<ZSeriesRing<F>>& L,
                                     const TruncatedZSeries<F>& L1, long p, std::size_t order) {
  const F& field = P.ring();
  const std::size_t W = L.weight_cap();
  if (P.weight_cap() != W) {
    throw std::invalid_argument("triangle_op: weight caps differ");
  }
  if (!field.is_zero(L1[0])) {
    throw std::invalid_argument("triangle_op: L1 must have zero constant term");
  }
  ZSeriesRing<F> ring{field, order};
  for (const auto& [w, c] : L) {
    if (!w.empty() && w.depth() == 0 && !c.is_zero()) {
      throw std::invalid_argument("triangle_op: L is not regularized");
    }
  }

  NcSeries<ZSeriesRing<F>> X(ring, W);
  for (const auto& [w, c] : L) {
    X.set(w, mobius_transform(c.truncated(order)));
  }

  NcSeries<ZSeriesRing<F>> Y(ring, W);
  auto l1 = L1.truncated(order);
  for (std::size_t b = 0; b <= W; ++b) {
    Y.set(Word::e0_power(b), series_power_over_factorial(l1, static_cast<long>(b)));
  }

  NcSeries<ZSeriesRing<F>> A(ring, W);
  for (const auto& [v, c] : grouplike_inverse(L)) {
    auto scale = field.from_rational(Rational(Integer(1), Integer(prime_power(p, static_cast<long>(v.weight())))));
    A.set(v, frobenius_mobius_transform(c.scaled(scale), p, order));
  }
  auto Bp = conjugate_e1(P);
  NcSeries<ZSeriesRing<F>> B(ring, W);
  for (const auto& [w, c] : Bp) {
    B.set(w, ring.constant(c));
  }
  auto Z = substitute(A, B);
  return nc_mul(nc_mul(X, Y), Z);
}

}  // namespace pmzv
