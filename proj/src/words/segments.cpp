#include "pmzv/words/segments.hpp"

#include <algorithm>

namespace pmzv {

namespace {

void extend(const std::string& bits, const std::vector<std::size_t>& ones, std::size_t next_one, std::size_t prev_end,
            SegmentDecomposition& acc, std::vector<SegmentDecomposition>& out) {
  if (next_one == ones.size()) {
    out.push_back(acc);
    return;
  }
  for (std::size_t last_one = next_one; last_one < ones.size(); ++last_one) {
    std::size_t end_limit = last_one + 1 < ones.size() ? ones[last_one + 1] : bits.size();
    for (std::size_t s = prev_end; s <= ones[next_one]; ++s) {
      for (std::size_t e = ones[last_one] + 1; e <= end_limit; ++e) {
        acc.push_back({s, e});
        extend(bits, ones, last_one + 1, e, acc, out);
        acc.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<SegmentDecomposition> enumerate_e1_segments(const Word& w) {
  const std::string& bits = w.str();
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      ones.push_back(i);
    }
  }
  std::vector<SegmentDecomposition> out;
  if (ones.empty()) {
    return out;
  }
  SegmentDecomposition acc;
  extend(bits, ones, 0, 0, acc, out);
  std::sort(out.begin(), out.end(), [](const SegmentDecomposition& a, const SegmentDecomposition& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].start != b[k].start) {
        return a[k].start < b[k].start;
      }
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].end != b[k].end) {
        return a[k].end < b[k].end;
      }
    }
    return false;
  });
  return out;
}

void validate_segments(const Word& w, const SegmentDecomposition& segs) {
  if (segs.empty()) {
    throw StructuralError("decomposition has no segments");
  }
  const std::string& bits = w.str();
  std::size_t pos = 0;
  for (const Segment& s : segs) {
    if (s.start < pos || s.end <= s.start || s.end > bits.size()) {
      throw StructuralError("segments must be nonempty, disjoint, increasing and inside the word");
    }
    if (bits.find('1', pos) < s.start) {
      throw StructuralError("gap between segments contains e1");
    }
    if (bits.substr(s.start, s.length()).find('1') == std::string::npos) {
      throw StructuralError("segment without e1");
    }
    pos = s.end;
  }
  if (bits.find('1', pos) != std::string::npos) {
    throw StructuralError("gap between segments contains e1");
  }
}

Word contract(const Word& w, const SegmentDecomposition& segs) {
  validate_segments(w, segs);
  std::string out;
  std::size_t pos = 0;
  for (const Segment& s : segs) {
    out.append(w.str(), pos, s.start - pos);
    out.push_back('1');
    pos = s.end;
  }
  out.append(w.str(), pos, std::string::npos);
  return Word::parse(out);
}

std::size_t contracted_weight_loss(const SegmentDecomposition& segs) {
  std::size_t loss = 0;
  for (const Segment& s : segs) {
    loss += s.length() - 1;
  }
  return loss;
}

}  // namespace pmzv
