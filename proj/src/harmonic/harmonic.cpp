#include "pmzv/harmonic/harmonic.hpp"

namespace pmzv {

namespace {

void compositions(int total, int parts, std::vector<int>& acc, const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(acc.size()) == parts - 1) {
    acc.push_back(total);
    fn(acc);
    acc.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    acc.push_back(k);
    compositions(total - k, parts, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  if (parts <= 0) {
    if (total == 0) {
      fn({});
    }
    return;
  }
  std::vector<int> acc;
  compositions(total, parts, acc, fn);
}

Rational mhs(const Index& idx, long m) {
  // column[k] = h_{n1..nj}(k)
  std::vector<Rational> column(static_cast<std::size_t>(std::max(m, 0L)) + 1, Rational(1));
  for (int n : idx) {
    std::vector<Rational> next(column.size(), Rational(0));
    Rational acc = 0;
    for (std::size_t k = 1; k < column.size(); ++k) {
      next[k] = acc;
      acc += column[k] / Rational(integer_power(static_cast<long>(k), static_cast<unsigned long>(n)));
    }
    column = std::move(next);
  }
  return column[static_cast<std::size_t>(std::max(m, 0L))];
}

Rational bmhs(const Index& idx, long m) {
  Index prefix(idx.begin(), idx.end() - 1);
  Rational acc = 0;
  for (long k = 1; k <= m; ++k) {
    Rational a = mhs(prefix, k) / Rational(integer_power(k, static_cast<unsigned long>(idx.back())));
    Rational term = a * Rational(binomial(m - 1, m - k));
    acc += (k % 2 == 1) ? Rational(-term) : term;
  }
  return acc;
}

std::vector<std::pair<Integer, Index>> e0_extension_terms(const Word& w) {
  std::size_t tail = w.trailing_e0();
  Index core = word_to_index(w.subword(0, w.weight() - tail));
  std::vector<std::pair<Integer, Index>> out;
  for_each_composition(static_cast<int>(tail), static_cast<int>(core.size()), [&](const std::vector<int>& k) {
    Integer c = 1;
    Index ext = core;
    for (std::size_t i = 0; i < core.size(); ++i) {
      c *= binomial_negative(core[i], k[i]);
      ext[i] += k[i];
    }
    out.emplace_back(c, ext);
  });
  return out;
}

Rational bmhs_word(const Word& w, long m) {
  if (w.depth() == 0) {
    return (w.empty() && m == 0) ? Rational(1) : Rational(0);
  }
  if (w.ends_with_e1()) {
    return bmhs(word_to_index(w), m);
  }
  Rational acc = 0;
  for (const auto& [c, ext] : e0_extension_terms(w)) {
    acc += Rational(c) * bmhs(ext, m);
  }
  return acc;
}

bool reciprocal_check(const Index& idx, long m) {
  Index prefix(idx.begin(), idx.end() - 1);
  Rational lhs = mhs(prefix, m) / Rational(integer_power(m, static_cast<unsigned long>(idx.back())));
  Rational rhs = 0;
  for (long k = 1; k <= m; ++k) {
    Rational term = bmhs(idx, k) * Rational(binomial(m - 1, m - k));
    rhs += (k % 2 == 1) ? Rational(-term) : term;
  }
  return lhs == rhs;
}

}  // namespace pmzv
