#pragma once

#include <functional>
#include <map>
#include <optional>

#include "pmzv/engine/limit.hpp"

namespace pmzv {

struct TableOptions {
  long p = 5;
  int weight = 4;
  // Target digits; working precision is target + guard.
  long target_precision = 10;
  long guard = -1;  // < 0: chosen from weight and levels
  // Levels per depth; depths not listed use n_max (0: default_n_max(p)).
  std::map<int, long> levels_by_depth;
  long n_max = 0;
  SamplingGrid grid = SamplingGrid::dense;
  SignConvention sign = SignConvention::mahler;
  unsigned threads = 0;  // 0: hardware concurrency
  // Called after each index is finished, possibly from a worker thread.
  std::function<void(const LimitReport&)> progress;
};

struct TableResult {
  MzvTable<PadicField> table;
  std::map<Index, LimitReport> reports;
  SignConvention sign = SignConvention::mahler;
  long working_precision = 0;
  double seconds = 0;
};

long default_n_max(long p);
long levels_for_depth(const TableOptions& options, int depth);
long working_precision(const TableOptions& options);

// Depth by depth: every index of weight <= W and depth d is computed
// in parallel from the frozen entries of depth < d.
TableResult build_table(const TableOptions& options);

// One value, building the lower-depth table it needs first.
LimitReport compute_mzv(const Index& idx, const TableOptions& options);

// Tries mahler, then literal, and keeps the first whose weight <= min(W, 4)
// table passes the shuffle check.
SignConvention resolve_sign(const TableOptions& options);

}  // namespace pmzv
