#pragma once

#include <map>

#include "pmzv/arith/rational.hpp"
#include "pmzv/words/word.hpp"

namespace pmzv {

// Finitely supported rational combination of words; zero coefficients are never stored.
class WordPolynomial {
 public:
  using Map = std::map<Word, Rational>;

  WordPolynomial() = default;
  explicit WordPolynomial(const Word& w, const Rational& c = 1) { add(w, c); }

  void add(const Word& w, const Rational& c);
  Rational coefficient(const Word& w) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Rational coefficient_sum() const;

  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  WordPolynomial& operator+=(const WordPolynomial& other);
  WordPolynomial& operator*=(const Rational& c);
  friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial& b) { return a += b; }
  friend bool operator==(const WordPolynomial&, const WordPolynomial&) = default;

 private:
  Map terms_;
};

WordPolynomial shuffle(const Word& u, const Word& v);
WordPolynomial shuffle(const WordPolynomial& a, const WordPolynomial& b);

struct SignedWord {
  int sign = 1;
  Word word;
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

// w -> (-1)^{wt w} w^rev
SignedWord antipode(const Word& w);
SignedWord antipode(const SignedWord& w);

}  // namespace pmzv
