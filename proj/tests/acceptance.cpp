#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "pmzv/verify/suites.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  double limit_seconds;  // <= 0: untimed
  const char* what;
};

const std::vector<Criterion> kCriteria = {
    {1, "contraction", 10, "substitute equals word expansion, >= 100 pairs, weight cap 5, exact"},
    {2, "prop-sec2", 60, "triangle_op equals the engine assembly, weight <= 4, z-order <= 20, exact"},
    {3, "transforms", 10, "mobius involution and reciprocal formula, weight <= 6, m <= 30, exact"},
    {4, "bmhs", 1, "h^B_(1) and h^B_(2) closed forms for m <= 50, exact"},
    {5, "examples", 120, "depth one and two sums equal the general evaluator, weight <= 5, m <= 2p^2, p in {3,5}"},
    {6, "adjoint", 120, "closed adjoint formula equals conjugation, weight <= 5, p = 5, >= 4 digits"},
    {7, "even-zeta", 300, "zeta_5(2), zeta_5(4), zeta_3(2) vanish to >= 3 certified digits"},
    {8, "shuffle", 600, "Phi at p = 5, weight cap 4 is group-like within certified precision"},
    {9, "convergence", 0, "v_p(S(p^{N+1}) - S(p^N)) nondecreasing for (2), (3), (1,2) at p = 5"},
    {10, "exact-identity", 30, "theorem_partial_sum((1), p^N) = 0 for N <= N_max, p in {2,3,5}, exact"},
};

}  // namespace

int main() {
  pmzv::SuiteConfig config;
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    pmzv::SuiteResult r;
    std::string error;
    auto start = std::chrono::steady_clock::now();
    try {
      r = pmzv::run_suite(c.suite, config);
    } catch (const std::exception& e) {
      r.passed = false;
      error = e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    bool pass = r.passed && in_time && error.empty();
    failures += pass ? 0 : 1;
    std::string limit = c.limit_seconds > 0 ? " of " + std::to_string(static_cast<int>(c.limit_seconds)) + " s" : "";
    std::printf("criterion %d: %s  %s  [%s, %zu checks, %.2f s%s]\n", c.number, pass ? "PASS" : "FAIL", c.what,
                c.suite, r.checks, seconds, limit.c_str());
    if (!error.empty()) {
      std::printf("  error: %s\n", error.c_str());
    } else if (!r.detail.empty()) {
      std::printf("  %s\n", r.detail.c_str());
    }
    if (!in_time) {
      std::printf("  over the time limit\n");
    }
  }
  std::printf("%zu criteria, %d failed\n", kCriteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
