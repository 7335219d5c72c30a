#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pmzv/engine/table.hpp"

namespace pmzv {

struct SuiteConfig {
  long p = 5;
  long precision = 10;
  long n_max = 0;  // 0: default_n_max(p)
  int weight = 4;
  std::uint64_t seed = 20240601;
  SignConvention sign = SignConvention::mahler;
  unsigned threads = 0;
};

struct SuiteResult {
  std::string name;
  std::string identity;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;  // first counterexample, or a summary line
  double seconds = 0;
};

struct SuiteInfo {
  std::string name;
  std::function<SuiteResult(const SuiteConfig&)> run;
};

const std::vector<SuiteInfo>& suite_registry();
// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

// Oracles shared with the tests.
Rational random_rational(std::mt19937_64& rng, int bound = 9);

// A(e0, B) by expanding every word of A letter by letter, e1 -> B.
NcSeries<RationalField> substitute_by_expansion(const NcSeries<RationalField>& A, const NcSeries<RationalField>& B);

// exp of a random Lie polynomial without degree-one terms.
NcSeries<RationalField> random_grouplike(std::mt19937_64& rng, std::size_t W);

// All e1-segment decompositions by brute force over position labels.
std::vector<SegmentDecomposition> brute_force_segments(const Word& w);

// sum over compositions of l into b parts prime to p of 1/(b! i_1 ... i_b).
Rational composition_enumeration(long b, long l, long p);

// Regularized polylogarithm series: coefficient at v is (-1)^dp(v) times the
// Taylor coefficients of Li_v (e0-terminated words by extension).
NcSeries<ZSeriesRing<RationalField>> regularized_polylog_series(std::size_t W, std::size_t order);

// Extends coefficients given at index words to every word of weight <= W by
// the shuffle relation with R_{e0} = L1, assuming R group-like.
std::map<Word, std::vector<Rational>> extend_by_shuffle(const std::map<Word, std::vector<Rational>>& index_part,
                                                        const std::vector<Rational>& L1, std::size_t W);

// Smallest absolute precision at which the shuffle identities of P hold,
// over all nonempty u <= v with wt u + wt v <= cap.
struct ShuffleCheck {
  GrouplikeReport report;
  long min_precision = Padic::kExact;
};
ShuffleCheck shuffle_check(const NcSeries<PadicField>& P);

}  // namespace pmzv
