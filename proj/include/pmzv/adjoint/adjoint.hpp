#pragma once

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "pmzv/arith/field.hpp"
#include "pmzv/harmonic/harmonic.hpp"
#include "pmzv/ncseries/ncseries.hpp"
#include "pmzv/words/word.hpp"

namespace pmzv {

class InsufficientTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// zeta values by index, filled depth by depth. Reads may be logged to check
// which depths a computation touches.
template <CoefficientField F>
class MzvTable {
 public:
  using V = typename F::value_type;

  MzvTable(F field, long p) : field_(field), p_(p) {}
  MzvTable(const MzvTable& other) : field_(other.field_), p_(other.p_), values_(other.values_) {}
  MzvTable& operator=(const MzvTable& other) {
    field_ = other.field_;
    p_ = other.p_;
    values_ = other.values_;
    return *this;
  }

  const F& field() const { return field_; }
  long prime() const { return p_; }

  void set(const Index& idx, V value) { values_.insert_or_assign(idx, std::move(value)); }
  bool contains(const Index& idx) const { return values_.count(idx) != 0; }

  const V& at(const Index& idx) const {
    auto it = values_.find(idx);
    if (it == values_.end()) {
      throw InsufficientTable("insufficient table depth/weight: missing zeta(" + format_index(idx) + ")");
    }
    if (logging_) {
      std::lock_guard<std::mutex> lock(log_mutex_);
      log_.insert(idx);
    }
    return it->second;
  }

  const std::map<Index, V>& entries() const { return values_; }
  std::size_t max_depth() const {
    std::size_t d = 0;
    for (const auto& [idx, v] : values_) {
      d = std::max(d, idx.size());
    }
    return d;
  }

  void enable_access_log(bool on = true) { logging_ = on; }
  std::set<Index> access_log() const {
    std::lock_guard<std::mutex> lock(log_mutex_);
    return log_;
  }
  void clear_access_log() {
    std::lock_guard<std::mutex> lock(log_mutex_);
    log_.clear();
  }

 private:
  F field_;
  long p_;
  std::map<Index, V> values_;
  bool logging_ = false;
  mutable std::mutex log_mutex_;
  mutable std::set<Index> log_;
};

// Phi_w: 1 at the empty word, 0 at e0^n, (-1)^d zeta(idx) at index words,
// and the binomial_negative composition sum at e0-terminated words.
template <CoefficientField F>
typename F::value_type phi_coefficient(const MzvTable<F>& table, const Word& w) {
  const F& field = table.field();
  if (w.depth() == 0) {
    return w.empty() ? field.one() : field.zero();
  }
  auto signed_zeta = [&](const Index& idx) {
    const auto& z = table.at(idx);
    return idx.size() % 2 == 0 ? z : typename F::value_type(-z);
  };
  if (w.ends_with_e1()) {
    return signed_zeta(word_to_index(w));
  }
  auto acc = field.zero();
  for (const auto& [c, ext] : e0_extension_terms(w)) {
    acc = acc + field.from_integer(c) * signed_zeta(ext);
  }
  return acc;
}

// Phi with every word of weight <= fill populated, inside a series of cap W.
template <CoefficientField F>
NcSeries<F> phi_from_table(const MzvTable<F>& table, std::size_t W, std::size_t fill) {
  NcSeries<F> phi(table.field(), W);
  for (const Word& w : words_up_to_weight(std::min(W, fill))) {
    phi.set(w, phi_coefficient(table, w));
  }
  return phi;
}

template <CoefficientField F>
NcSeries<F> phi_from_table(const MzvTable<F>& table, std::size_t W) {
  return phi_from_table(table, W, W);
}

// Closed formula for w' = e0^b e1 e0^{nd-1} e1 ... e0^{n1-1} e1 e0^a = (a; n1..nd; b).
template <CoefficientField F>
typename F::value_type adjoint_mzv(const Word& wp, const MzvTable<F>& table) {
  using V = typename F::value_type;
  const F& field = table.field();
  std::size_t depth = wp.depth();
  if (depth == 0) {
    return field.zero();
  }
  const std::string& s = wp.str();
  std::size_t b = s.find('1');
  std::size_t a = wp.trailing_e0();
  if (depth == 1) {
    return (a == 0 && b == 0) ? field.one() : field.zero();
  }
  Index n = word_to_index(wp.subword(b + 1, s.size() - a));
  const int d = static_cast<int>(n.size());
  auto shifted = [&](const std::vector<int>& k, int from, int to, bool reversed) {
    Index out;
    for (int i = from; i < to; ++i) {
      out.push_back(n[i] + k[i]);
    }
    if (reversed) {
      std::reverse(out.begin(), out.end());
    }
    return out;
  };
  auto weight = [&](const std::vector<int>& k, int from, int to) {
    Integer c = 1;
    for (int i = from; i < to; ++i) {
      c *= binomial_negative(n[i], k[i]);
    }
    return c;
  };

  V acc = field.zero();
  for (int dp = 1; dp <= d - 1; ++dp) {
    int tail = 0;
    for (int i = dp; i < d; ++i) {
      tail += n[i];
    }
    bool negative = (tail + static_cast<int>(b)) % 2 != 0;
    for_each_composition(static_cast<int>(a), dp, [&](const std::vector<int>& lo) {
      for_each_composition(static_cast<int>(b), d - dp, [&](const std::vector<int>& hi) {
        std::vector<int> k(lo);
        k.insert(k.end(), hi.begin(), hi.end());
        Integer c = weight(k, 0, d);
        V term = field.from_integer(negative ? Integer(-c) : c) * table.at(shifted(k, 0, dp, false)) *
                 table.at(shifted(k, dp, d, true));
        acc = acc + term;
      });
    });
  }
  if (a == 0) {
    int total = static_cast<int>(b) + index_weight(n);
    for_each_composition(static_cast<int>(b), d, [&](const std::vector<int>& k) {
      Integer c = weight(k, 0, d);
      acc = acc + field.from_integer(total % 2 == 0 ? c : Integer(-c)) * table.at(shifted(k, 0, d, true));
    });
  }
  if (b == 0) {
    for_each_composition(static_cast<int>(a), d, [&](const std::vector<int>& k) {
      acc = acc + field.from_integer(weight(k, 0, d)) * table.at(shifted(k, 0, d, false));
    });
  }
  return acc;
}

// (-1)^{dp(w')-1} (Phi^{-1} e1 Phi)_{w'} computed by noncommutative products.
template <CoefficientField F>
typename F::value_type adjoint_mzv_via_conjugation(const Word& wp, const MzvTable<F>& table) {
  const std::size_t W = wp.weight();
  if (wp.depth() == 0) {
    return table.field().zero();
  }
  auto phi = phi_from_table(table, W, W - 1);
  phi.set(Word(), table.field().one());
  auto conj = conjugate_e1(phi);
  const auto& c = conj[wp];
  return (wp.depth() - 1) % 2 == 0 ? c : typename F::value_type(-c);
}

// Memoized closed-formula adjoint values over a frozen table.
template <CoefficientField F>
class AdjointCache {
 public:
  using V = typename F::value_type;

  explicit AdjointCache(const MzvTable<F>& table) : table_(table) {}

  V operator()(const Word& w) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = values_.find(w);
      if (it != values_.end()) {
        return it->second;
      }
    }
    V v = adjoint_mzv(w, table_);
    std::lock_guard<std::mutex> lock(mutex_);
    values_.emplace(w, v);
    return v;
  }

 private:
  const MzvTable<F>& table_;
  std::mutex mutex_;
  std::unordered_map<Word, V> values_;
};

}  // namespace pmzv
