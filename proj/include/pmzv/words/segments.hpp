#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pmzv/words/word.hpp"

namespace pmzv {

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Half-open position range [start, end) in a host word.
struct Segment {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Disjoint increasing segments, each holding an e1; gaps between them are e1-free.
using SegmentDecomposition = std::vector<Segment>;

// Every e1-segment decomposition of w, ordered by (r, start positions, end positions).
// Empty for words of depth 0.
std::vector<SegmentDecomposition> enumerate_e1_segments(const Word& w);

// Throws StructuralError when segs is not a valid decomposition of w.
void validate_segments(const Word& w, const SegmentDecomposition& segs);

// Replace each segment by a single e1.
Word contract(const Word& w, const SegmentDecomposition& segs);

// Sum over segments of (length - 1).
std::size_t contracted_weight_loss(const SegmentDecomposition& segs);

}  // namespace pmzv
