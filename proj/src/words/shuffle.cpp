#include "pmzv/words/shuffle.hpp"

#include <vector>

namespace pmzv {

void WordPolynomial::add(const Word& w, const Rational& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Rational WordPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational WordPolynomial::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [w, c] : terms_) {
    s += c;
  }
  return s;
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& other) {
  for (const auto& [w, c] : other.terms_) {
    add(w, c);
  }
  return *this;
}

WordPolynomial& WordPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) {
    x *= c;
  }
  return *this;
}

WordPolynomial shuffle(const Word& u, const Word& v) {
  // table[i][j]: shuffles of the suffixes u[i..], v[j..]
  const std::string& a = u.str();
  const std::string& b = v.str();
  std::vector<std::vector<std::map<std::string, Integer>>> table(a.size() + 1,
                                                                 std::vector<std::map<std::string, Integer>>(b.size() + 1));
  for (std::size_t i = a.size() + 1; i-- > 0;) {
    for (std::size_t j = b.size() + 1; j-- > 0;) {
      auto& cell = table[i][j];
      if (i == a.size()) {
        cell[b.substr(j)] = 1;
        continue;
      }
      if (j == b.size()) {
        cell[a.substr(i)] = 1;
        continue;
      }
      for (const auto& [s, c] : table[i + 1][j]) {
        cell[a[i] + s] += c;
      }
      for (const auto& [s, c] : table[i][j + 1]) {
        cell[b[j] + s] += c;
      }
    }
  }
  WordPolynomial out;
  for (const auto& [s, c] : table[0][0]) {
    out.add(Word::parse(s), Rational(c));
  }
  return out;
}

WordPolynomial shuffle(const WordPolynomial& a, const WordPolynomial& b) {
  WordPolynomial out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      WordPolynomial s = shuffle(u, v);
      s *= cu * cv;
      out += s;
    }
  }
  return out;
}

SignedWord antipode(const Word& w) { return {w.weight() % 2 == 0 ? 1 : -1, w.reversed()}; }

SignedWord antipode(const SignedWord& w) {
  SignedWord s = antipode(w.word);
  s.sign *= w.sign;
  return s;
}

}  // namespace pmzv
