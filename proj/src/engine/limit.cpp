#include "pmzv/engine/limit.hpp"

#include <algorithm>

namespace pmzv {

const char* to_string(SamplingGrid g) { return g == SamplingGrid::geometric ? "geometric" : "dense"; }

SamplingGrid parse_sampling_grid(const std::string& text) {
  if (text == "geometric") {
    return SamplingGrid::geometric;
  }
  if (text == "dense") {
    return SamplingGrid::dense;
  }
  throw std::invalid_argument("unknown sampling grid '" + text + "' (expected geometric or dense)");
}

std::vector<std::size_t> sample_points(long p, long n_max, SamplingGrid grid) {
  if (n_max < 1) {
    throw std::invalid_argument("N_max must be >= 1");
  }
  std::vector<std::size_t> out;
  std::size_t pp = static_cast<std::size_t>(p);
  std::size_t q = pp;
  for (long N = 1; N <= n_max; ++N, q *= pp) {
    if (grid == SamplingGrid::geometric || N == n_max) {
      out.push_back(q);
    } else {
      for (std::size_t j = 1; j < pp; ++j) {
        out.push_back(j * q);
      }
    }
  }
  return out;
}

std::vector<Padic> neville_extrapolants(const std::vector<std::size_t>& xs, const std::vector<Padic>& ys, long p,
                                        long precision) {
  const std::size_t n = xs.size();
  std::vector<Padic> x;
  for (std::size_t v : xs) {
    x.push_back(Padic::from_integer(Integer(static_cast<unsigned long>(v)), p, precision));
  }
  // column[i] holds the interpolant through points i..i+k evaluated at 0
  std::vector<Padic> column = ys;
  std::vector<Padic> out;
  if (n == 0) {
    return out;
  }
  out.push_back(column[0]);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      column[i] = (x[i] * column[i + 1] - x[i + k] * column[i]) / (x[i] - x[i + k]);
    }
    out.push_back(column[0]);
  }
  return out;
}

LimitReport mzv_limit(TriangleEvaluator<PadicField>& ev, const Index& idx, const LimitOptions& options) {
  if (options.n_max < 2) {
    throw std::invalid_argument("N_max must be >= 2");
  }
  const long p = ev.prime();
  LimitReport report;
  report.index = idx;
  report.p = p;
  report.sign = options.sign;

  std::vector<std::size_t> points = sample_points(p, options.n_max, options.grid);
  std::vector<std::size_t> order = points;
  std::stable_sort(order.begin(), order.end(), [p](std::size_t a, std::size_t b) {
    long va = p_valuation(Integer(static_cast<unsigned long>(a)), p);
    long vb = p_valuation(Integer(static_cast<unsigned long>(b)), p);
    return va != vb ? va < vb : a < b;
  });
  ev.reserve(*std::max_element(points.begin(), points.end()));

  std::vector<Padic> ys;
  for (std::size_t m : order) {
    Padic s = theorem_partial_sum(ev, idx, m, options.sign);
    report.samples.push_back({m, s});
    ys.push_back(s);
  }
  std::size_t q = 1;
  for (long N = 1; N <= options.n_max; ++N) {
    q *= static_cast<std::size_t>(p);
    for (const auto& s : report.samples) {
      if (s.m == q) {
        report.levels.push_back({N, s.value});
      }
    }
  }
  for (std::size_t i = 0; i + 1 < report.levels.size(); ++i) {
    report.convergence.push_back(report.levels[i + 1].value.agreement(report.levels[i].value));
  }

  report.extrapolants = neville_extrapolants(order, ys, p, ev.field().precision);
  for (std::size_t k = 0; k + 1 < report.extrapolants.size(); ++k) {
    report.agreements.push_back(report.extrapolants[k + 1].agreement(report.extrapolants[k]));
  }
  if (report.agreements.size() >= 2) {
    long first = report.agreements.front();
    long last = report.agreements.back();
    long cap = std::min(report.extrapolants.back().absolute_precision(),
                        report.extrapolants[report.extrapolants.size() - 2].absolute_precision());
    if (last <= first && last < cap) {
      throw DivergenceError("zeta(" + format_index(idx) + "): extrapolant agreement did not improve (" +
                                std::to_string(first) + " first, " + std::to_string(last) + " last)",
                            report);
    }
  }

  Padic limit = report.extrapolants.back();
  long certified = std::min(report.agreements.back(), limit.absolute_precision()) - options.safety_margin;
  if (options.sign == SignConvention::mahler) {
    // zeta = (-1)^d (a_0 - lim T) = (-1)^d a_0 + lim S
    Padic a0 = ev.coefficient(idx, 0);
    limit = idx.size() % 2 == 0 ? limit + a0 : limit - a0;
  }
  report.certified_precision = certified;
  report.value = limit.truncated(certified);
  return report;
}

}  // namespace pmzv
