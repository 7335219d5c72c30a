#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmzv {

enum class Letter : char { e0 = '0', e1 = '1' };

// Word over {e0, e1}. Text form: "0"/"1" per letter, left to right.
class Word {
 public:
  Word() = default;

  static Word parse(std::string_view text);
  static Word e0_power(std::size_t n) { return Word(std::string(n, '0')); }
  static Word letter(Letter l) { return Word(std::string(1, static_cast<char>(l))); }

  std::size_t weight() const { return bits_.size(); }
  std::size_t depth() const;
  bool empty() const { return bits_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(bits_[i]); }
  bool ends_with_e1() const { return !bits_.empty() && bits_.back() == '1'; }

  Word reversed() const;
  Word subword(std::size_t start, std::size_t end) const {
    return Word(bits_.substr(start, end - start));
  }
  // Number of trailing e0 letters.
  std::size_t trailing_e0() const;

  const std::string& str() const { return bits_; }

  Word& operator+=(const Word& other) {
    bits_ += other.bits_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex: by weight, then lexicographically with e0 < e1.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  explicit Word(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

// Index (n1, ..., nd) with all entries >= 1.
using Index = std::vector<int>;

Index parse_index(std::string_view text);
std::string format_index(const Index& idx);
int index_weight(const Index& idx);

// (n1, ..., nd) -> e0^{nd-1} e1 ... e0^{n1-1} e1
Word index_to_word(const Index& idx);
// Inverse of index_to_word; throws std::invalid_argument unless w ends in e1.
Index word_to_index(const Word& w);

// All words of weight exactly n, resp. at most n, in shortlex order.
std::vector<Word> words_of_weight(std::size_t n);
std::vector<Word> words_up_to_weight(std::size_t n);
// All indices of weight at most w, ordered by depth, then weight, then shortlex word.
std::vector<Index> indices_up_to_weight(int w);

}  // namespace pmzv

template <>
struct std::hash<pmzv::Word> {
  std::size_t operator()(const pmzv::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
