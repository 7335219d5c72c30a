#include "pmzv/words/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pmzv {

Word Word::parse(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("word must consist of '0' and '1' letters: '" + std::string(text) + "'");
    }
  }
  return Word(std::string(text));
}

std::size_t Word::depth() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1')); }

Word Word::reversed() const { return Word(std::string(bits_.rbegin(), bits_.rend())); }

std::size_t Word::trailing_e0() const {
  std::size_t pos = bits_.find_last_of('1');
  return pos == std::string::npos ? bits_.size() : bits_.size() - pos - 1;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) {
    return c;
  }
  return a.bits_.compare(b.bits_) <=> 0;
}

Index parse_index(std::string_view text) {
  Index idx;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!part.empty() && part.front() == ' ') {
      part.remove_prefix(1);
    }
    while (!part.empty() && part.back() == ' ') {
      part.remove_suffix(1);
    }
    int n = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), n);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || n < 1) {
      throw std::invalid_argument("index entries must be integers >= 1: '" + std::string(text) + "'");
    }
    idx.push_back(n);
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return idx;
}

std::string format_index(const Index& idx) {
  std::ostringstream out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out << (i ? "," : "") << idx[i];
  }
  return out.str();
}

int index_weight(const Index& idx) {
  int w = 0;
  for (int n : idx) {
    w += n;
  }
  return w;
}

Word index_to_word(const Index& idx) {
  std::string bits;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (*it < 1) {
      throw std::invalid_argument("index entries must be >= 1");
    }
    bits.append(static_cast<std::size_t>(*it - 1), '0');
    bits.push_back('1');
  }
  return Word::parse(bits);
}

Index word_to_index(const Word& w) {
  if (!w.ends_with_e1()) {
    throw std::invalid_argument("not an index word: '" + w.str() + "'");
  }
  Index idx;
  int run = 0;
  for (char c : w.str()) {
    if (c == '0') {
      ++run;
    } else {
      idx.push_back(run + 1);
      run = 0;
    }
  }
  std::reverse(idx.begin(), idx.end());
  return idx;
}

std::vector<Word> words_of_weight(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::string bits(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << (n - 1 - i))) {
        bits[i] = '1';
      }
    }
    out.push_back(Word::parse(bits));
  }
  return out;
}

std::vector<Word> words_up_to_weight(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = words_of_weight(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Index> indices_up_to_weight(int w) {
  std::vector<Word> words;
  for (int k = 1; k <= w; ++k) {
    for (auto& v : words_of_weight(static_cast<std::size_t>(k))) {
      if (v.ends_with_e1()) {
        words.push_back(v);
      }
    }
  }
  std::stable_sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    if (a.depth() != b.depth()) {
      return a.depth() < b.depth();
    }
    return a < b;
  });
  std::vector<Index> out;
  for (auto& v : words) {
    out.push_back(word_to_index(v));
  }
  return out;
}

}  // namespace pmzv
