#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pmzv/arith/binomial.hpp"
#include "pmzv/verify/suites.hpp"
#include "pmzv/words/segments.hpp"
#include "pmzv/words/shuffle.hpp"
#include "pmzv/words/word.hpp"

using namespace pmzv;

namespace {

Word W(const char* s) { return Word::parse(s); }

SegmentDecomposition segs(std::initializer_list<std::pair<std::size_t, std::size_t>> ranges) {
  SegmentDecomposition d;
  for (auto [a, b] : ranges) {
    d.push_back(Segment{a, b});
  }
  return d;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("parse accepts binary letters only") {
  CHECK(W("0110").weight() == 4);
  CHECK(W("0110").depth() == 2);
  CHECK(W("").empty());
  CHECK_THROWS_AS(W("012"), std::invalid_argument);
}

TEST_CASE("index_to_word") {
  CHECK(index_to_word({2}) == W("01"));
  CHECK(index_to_word({1, 2}) == W("011"));
  CHECK(index_to_word({1}) == W("1"));
  CHECK(index_to_word({3, 1, 2}) == W("011001"));
}

TEST_CASE("word_to_index") {
  CHECK(word_to_index(W("001")) == Index{3});
  CHECK(word_to_index(W("101")) == Index{2, 1});
  CHECK_THROWS_AS(word_to_index(W("10")), std::invalid_argument);
  CHECK_THROWS_AS(word_to_index(W("")), std::invalid_argument);
}

TEST_CASE("index and word round trip") {
  for (const Index& idx : indices_up_to_weight(7)) {
    Word w = index_to_word(idx);
    CHECK(w.weight() == static_cast<std::size_t>(index_weight(idx)));
    CHECK(w.depth() == idx.size());
    CHECK(word_to_index(w) == idx);
  }
}

TEST_CASE("parse_index and format_index") {
  CHECK(parse_index("1,2") == Index{1, 2});
  CHECK(parse_index(" 3 ") == Index{3});
  CHECK(format_index({2, 1, 3}) == "2,1,3");
  CHECK_THROWS(parse_index("0"));
  CHECK_THROWS(parse_index("1,,2"));
  CHECK_THROWS(parse_index("a"));
}

TEST_CASE("indices_up_to_weight counts compositions") {
  // 2^{n-1} indices of weight n
  CHECK(indices_up_to_weight(2).size() == 3);
  CHECK(indices_up_to_weight(5).size() == 1 + 2 + 4 + 8 + 16);
  auto two = indices_up_to_weight(2);
  CHECK(two[0] == Index{1});
  CHECK(two[1] == Index{2});
  CHECK(two[2] == Index{1, 1});
}

TEST_CASE("reverse, weight, depth") {
  CHECK(W("011").reversed() == W("110"));
  CHECK(W("011").weight() == 3);
  CHECK(W("011").depth() == 2);
  for (const Word& w : words_up_to_weight(6)) {
    CHECK(w.reversed().reversed() == w);
  }
}

TEST_CASE("words are enumerated in shortlex order") {
  auto ws = words_up_to_weight(4);
  CHECK(ws.size() == 31);
  CHECK(std::is_sorted(ws.begin(), ws.end()));
  CHECK(words_of_weight(3).size() == 8);
}

TEST_CASE("segments of e1 e0 e0") {
  auto d = enumerate_e1_segments(W("100"));
  REQUIRE(d.size() == 3);
  CHECK(d[0] == segs({{0, 1}}));
  CHECK(d[1] == segs({{0, 2}}));
  CHECK(d[2] == segs({{0, 3}}));
}

TEST_CASE("segments of e1 e0 e1") {
  auto d = enumerate_e1_segments(W("101"));
  REQUIRE(d.size() == 4);
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> got;
  for (const auto& s : d) {
    std::vector<std::pair<std::size_t, std::size_t>> v;
    for (const auto& g : s) {
      v.emplace_back(g.start, g.end);
    }
    got.insert(v);
  }
  CHECK(got.count({{0, 3}}) == 1);
  CHECK(got.count({{0, 1}, {2, 3}}) == 1);
  CHECK(got.count({{0, 2}, {2, 3}}) == 1);
  CHECK(got.count({{0, 1}, {1, 3}}) == 1);
}

TEST_CASE("e1 e0^m has m + 1 single-segment decompositions") {
  for (std::size_t m = 0; m <= 6; ++m) {
    auto d = enumerate_e1_segments(W("1") + Word::e0_power(m));
    CHECK(d.size() == m + 1);
    for (const auto& s : d) {
      CHECK(s.size() == 1);
    }
  }
}

TEST_CASE("depth-zero words have no segments") {
  CHECK(enumerate_e1_segments(W("")).empty());
  CHECK(enumerate_e1_segments(W("000")).empty());
}

TEST_CASE("segment enumeration matches brute force") {
  for (const Word& w : words_up_to_weight(7)) {
    if (w.depth() == 0) {
      continue;
    }
    auto a = enumerate_e1_segments(w);
    auto b = brute_force_segments(w);
    std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const Segment& s, const Segment& t) {
        return std::pair(s.start, s.end) < std::pair(t.start, t.end);
      });
    });
    std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const Segment& s, const Segment& t) {
        return std::pair(s.start, s.end) < std::pair(t.start, t.end);
      });
    });
    CHECK_MESSAGE(a == b, w.str());
    for (const auto& s : a) {
      CHECK_NOTHROW(validate_segments(w, s));
    }
  }
}

TEST_CASE("validate_segments rejects bad families") {
  CHECK_THROWS_AS(validate_segments(W("101"), segs({{0, 1}})), StructuralError);
  CHECK_THROWS_AS(validate_segments(W("101"), segs({{0, 2}, {1, 3}})), StructuralError);
  CHECK_THROWS_AS(validate_segments(W("101"), segs({{1, 2}, {2, 3}})), StructuralError);
  CHECK_THROWS_AS(validate_segments(W("101"), segs({{0, 4}})), StructuralError);
}

TEST_CASE("contract") {
  CHECK(contract(W("100"), segs({{0, 2}})) == W("10"));
  CHECK(contract(W("101"), segs({{0, 3}})) == W("1"));
  CHECK(contract(W("101"), segs({{0, 2}, {2, 3}})) == W("11"));
  CHECK(contract(W("0101"), segs({{1, 4}})) == W("01"));
  CHECK(contracted_weight_loss(segs({{0, 2}, {2, 5}})) == 1 + 2);
}

TEST_CASE("contraction keeps depth equal to the segment count") {
  for (const Word& w : words_up_to_weight(6)) {
    for (const auto& s : enumerate_e1_segments(w)) {
      Word c = contract(w, s);
      CHECK(c.depth() == s.size());
      CHECK(c.weight() + contracted_weight_loss(s) == w.weight());
    }
  }
}

TEST_CASE("shuffle examples") {
  WordPolynomial s = shuffle(W("1"), W("01"));
  CHECK(s.size() == 2);
  CHECK(s.coefficient(W("101")) == 1);
  CHECK(s.coefficient(W("011")) == 2);
  CHECK(shuffle(W("0110"), W("")) == WordPolynomial(W("0110")));
  CHECK(shuffle(W("0"), W("0")) == WordPolynomial(W("00"), 2));
}

TEST_CASE("shuffle is commutative and counts binomially") {
  for (const Word& u : words_up_to_weight(3)) {
    for (const Word& v : words_up_to_weight(3)) {
      WordPolynomial a = shuffle(u, v);
      CHECK(a == shuffle(v, u));
      CHECK(a.coefficient_sum() == Rational(binomial(static_cast<long>(u.weight() + v.weight()), static_cast<long>(u.weight()))));
    }
  }
}

TEST_CASE("shuffle is associative") {
  std::mt19937_64 rng(3);
  auto ws = words_up_to_weight(3);
  std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
  for (int t = 0; t < 40; ++t) {
    Word a = ws[pick(rng)], b = ws[pick(rng)], c = ws[pick(rng)];
    CHECK(shuffle(shuffle(a, b), WordPolynomial(c)) == shuffle(WordPolynomial(a), shuffle(b, c)));
  }
}

TEST_CASE("antipode") {
  CHECK(antipode(W("01")) == SignedWord{1, W("10")});
  CHECK(antipode(W("1")) == SignedWord{-1, W("1")});
  CHECK(antipode(W("0111")) == SignedWord{1, W("1110")});
  for (const Word& w : words_up_to_weight(5)) {
    CHECK(antipode(antipode(w)) == SignedWord{1, w});
  }
}

}
