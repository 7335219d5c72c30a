#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "pmzv/arith/binomial.hpp"
#include "pmzv/arith/field.hpp"
#include "pmzv/words/word.hpp"
#include "pmzv/zseries/series.hpp"

namespace pmzv {

// Calls fn(k) for every composition k_1 + ... + k_parts = total with k_i >= 0,
// in lexicographic order.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn);

// h_{n1..nd}(m) = sum_{0<m1<...<md<m} 1/(m1^n1 ... md^nd); 1 for the empty index.
Rational mhs(const Index& idx, long m);

// h^B_{n1..nd}(m) = sum_{k=1}^m (-1)^k h_{n1..n_{d-1}}(k)/k^{nd} C(m-1, m-k), from the definition.
Rational bmhs(const Index& idx, long m);

// h^B for any word: e1-terminated words are indices, e0-terminated words expand
// over compositions with binomial_negative weights, pure-e0 words follow the
// depth-0 rule (1 at (i, n) = (0, 0), else 0).
Rational bmhs_word(const Word& w, long m);

// Checks h_{n1..n_{d-1}}(m)/m^{nd} = sum_{k=1}^m (-1)^k h^B(k) C(m-1, m-k).
bool reciprocal_check(const Index& idx, long m);

// Coefficient sequence a_k = h_{n1..n_{d-1}}(k)/k^{nd}, k = 0..M (a_0 = 0).
template <CoefficientField F>
std::vector<typename F::value_type> polylog_coefficients(const F& field, const Index& idx, std::size_t M) {
  using V = typename F::value_type;
  std::vector<V> h(M + 1, field.one());
  auto inv_power = [&](std::size_t k, int n) {
    return field.from_rational(Rational(Integer(1), integer_power(static_cast<long>(k), static_cast<unsigned long>(n))));
  };
  for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
    std::vector<V> next(M + 1, field.zero());
    V acc = field.zero();
    for (std::size_t k = 1; k <= M; ++k) {
      next[k] = acc;
      acc = acc + h[k] * inv_power(k, idx[j]);
    }
    h = std::move(next);
  }
  std::vector<V> a(M + 1, field.zero());
  for (std::size_t k = 1; k <= M; ++k) {
    a[k] = h[k] * inv_power(k, idx.back());
  }
  return a;
}

// Terms of the e0-extension: w = (index word) e0^{n0-1} -> list of (weight, extended index).
std::vector<std::pair<Integer, Index>> e0_extension_terms(const Word& w);

// h^B_w(0..M), computed incrementally.
template <CoefficientField F>
std::vector<typename F::value_type> bmhs_table(const F& field, const Word& w, std::size_t M) {
  using V = typename F::value_type;
  if (w.depth() == 0) {
    std::vector<V> t(M + 1, field.zero());
    if (w.empty()) {
      t[0] = field.one();
    }
    return t;
  }
  if (w.ends_with_e1()) {
    return mobius_transform(field, polylog_coefficients(field, word_to_index(w), M));
  }
  std::vector<V> t(M + 1, field.zero());
  for (const auto& [c, ext] : e0_extension_terms(w)) {
    auto part = bmhs_table(field, index_to_word(ext), M);
    V k = field.from_integer(c);
    for (std::size_t i = 0; i <= M; ++i) {
      t[i] = t[i] + k * part[i];
    }
  }
  return t;
}

// Single value h^B_w(m) in O(m * depth) operations.
template <CoefficientField F>
typename F::value_type bmhs_value(const F& field, const Word& w, std::size_t m) {
  using V = typename F::value_type;
  if (w.depth() == 0) {
    return (w.empty() && m == 0) ? field.one() : field.zero();
  }
  if (!w.ends_with_e1()) {
    V acc = field.zero();
    for (const auto& [c, ext] : e0_extension_terms(w)) {
      acc = acc + field.from_integer(c) * bmhs_value(field, index_to_word(ext), m);
    }
    return acc;
  }
  if (m == 0) {
    return field.zero();
  }
  auto a = polylog_coefficients(field, word_to_index(w), m);
  V acc = field.zero();
  Integer c = 1;  // C(m-1, k-1)
  for (std::size_t k = 1; k <= m; ++k) {
    V term = a[k] * field.from_integer(c);
    acc = (k % 2 == 1) ? V(acc - term) : V(acc + term);
    c = c * Integer(static_cast<unsigned long>(m - k));
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return acc;
}

// Memoized h^B tables, one per word, kept at the largest argument bound requested.
// Safe for concurrent use.
template <CoefficientField F>
class BmhsCache {
 public:
  using V = typename F::value_type;
  using Table = std::shared_ptr<const std::vector<V>>;

  explicit BmhsCache(F field) : field_(field) {}

  const F& field() const { return field_; }

  // Table with at least M + 1 entries.
  Table get(const Word& w, std::size_t M) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = tables_.find(w);
      if (it != tables_.end() && it->second->size() >= M + 1) {
        return it->second;
      }
    }
    Table t;
    if (w.depth() >= 1 && !w.ends_with_e1()) {
      std::vector<V> acc(M + 1, field_.zero());
      for (const auto& [c, ext] : e0_extension_terms(w)) {
        Table part = get(index_to_word(ext), M);
        V k = field_.from_integer(c);
        for (std::size_t i = 0; i <= M; ++i) {
          acc[i] = acc[i] + k * (*part)[i];
        }
      }
      t = std::make_shared<const std::vector<V>>(std::move(acc));
    } else {
      t = std::make_shared<const std::vector<V>>(bmhs_table(field_, w, M));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = tables_[w];
    if (!slot || slot->size() < t->size()) {
      slot = t;
    }
    return slot;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return tables_.size();
  }

 private:
  F field_;
  mutable std::mutex mutex_;
  std::unordered_map<Word, Table> tables_;
};

}  // namespace pmzv
