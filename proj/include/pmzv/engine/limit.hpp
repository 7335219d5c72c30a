#pragma once

#include <stdexcept>
#include <vector>

#include "pmzv/engine/triangle.hpp"

namespace pmzv {

// Where the partial sums are sampled before extrapolating m -> 0 p-adically.
//   geometric: m = p, p^2, ..., p^{N_max}
//   dense:     m = j p^N for 1 <= N < N_max, 1 <= j < p, then p^{N_max}
enum class SamplingGrid { geometric, dense };

const char* to_string(SamplingGrid g);
SamplingGrid parse_sampling_grid(const std::string& text);

struct LimitOptions {
  long n_max = 3;
  SamplingGrid grid = SamplingGrid::dense;
  SignConvention sign = SignConvention::mahler;
  // Digits subtracted from the agreement when certifying.
  long safety_margin = 0;
};

struct LimitSample {
  std::size_t m = 0;
  Padic value;
};

struct LimitLevel {
  long N = 0;
  Padic value;
};

struct LimitReport {
  Index index;
  long p = 0;
  SignConvention sign = SignConvention::mahler;
  // In extrapolation order: decreasing |m|_p, then increasing m.
  std::vector<LimitSample> samples;
  // S(p^N) for N = 1..N_max.
  std::vector<LimitLevel> levels;
  // v_p(S(p^{N+1}) - S(p^N)), capped by precision.
  std::vector<long> convergence;
  // extrapolants[k]: value at m = 0 of the interpolant through samples[0..k].
  std::vector<Padic> extrapolants;
  // v_p(extrapolants[k+1] - extrapolants[k]).
  std::vector<long> agreements;
  Padic value;
  long certified_precision = 0;
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, LimitReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const LimitReport& report() const { return report_; }

 private:
  LimitReport report_;
};

std::vector<std::size_t> sample_points(long p, long n_max, SamplingGrid grid);

// Values at 0 of the interpolating polynomials through the first k points, k = 1..n.
std::vector<Padic> neville_extrapolants(const std::vector<std::size_t>& xs, const std::vector<Padic>& ys, long p,
                                        long precision);

// Samples theorem_partial_sum, extrapolates and certifies digits on which the
// last two extrapolants agree. Throws DivergenceError when the last agreement,
// away from the precision cap, is no better than the first.
LimitReport mzv_limit(TriangleEvaluator<PadicField>& ev, const Index& idx, const LimitOptions& options);

}  // namespace pmzv
