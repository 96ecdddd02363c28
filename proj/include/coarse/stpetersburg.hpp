#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "coarse/inertness.hpp"
#include "coarse/number.hpp"
#include "coarse/ops.hpp"

namespace coarse {

// Pays 2^(n-1) when the first tails shows on toss n, probability 2^-n.
// Sampling truncates at `depth` rounds; the tail mass 2^-(depth-1) is folded
// into the last outcome.
struct Gamble {
  unsigned depth = 64;
};

inline constexpr std::string_view kRngName = "splitmix64-counter";

Integer payoff(unsigned round);
Number outcome_probability(const Gamble& g, unsigned round);
// (depth - 1)/2 + 1 with the tail folded into the last outcome.
Number truncated_expectation(const Gamble& g);

// (1/2, 1/2, ...): 2^-n * 2^(n-1) for n = 1..depth.
std::vector<Number> expected_increment_series(std::size_t depth);

// Round counts n for each trial; trial t draws only from (seed, t), so the
// result does not depend on evaluation order.
std::vector<unsigned> sample_rounds(const Gamble& g, std::uint64_t trials, std::uint64_t seed);
std::vector<Number> sample_gamble(const Gamble& g, std::uint64_t trials, std::uint64_t seed);

struct ValuationReport {
  Number epsilon;
  std::size_t depth = 0;
  std::vector<Number> classical_partial_sums;
  // Strict-margin fold of the increments with the certified early exit
  // (bound 1/2, normalised increment 1/4).
  InertVerdict coarse_verdict;
  // The same fold under plain membership: the tie 1/4 + 1/4 = 1/2 keeps it
  // in the first cell.
  InertVerdict membership_verdict;
  CellIndex formula_index = 0;  // floor(eps/2) + 1
  std::optional<CellIndex> scan_index;
  bool agreement = false;
};

// EpsilonGrowth(eps) with the median representative.
ValuationReport coarse_value(const Number& epsilon, std::size_t depth);

struct StreamComparison {
  InertVerdict expected_verdict;
  InertVerdict sampled_verdict;
  Number classical_expected_sum;
  Number classical_sampled_sum;
};

// Folds both the expected-increment stream (depth steps) and a sampled
// payoff stream (trials steps) under ctx. The sampled fold is exploratory.
StreamComparison compare_streams(const CoarseContext& ctx, const Gamble& g, std::size_t depth,
                                 std::uint64_t trials, std::uint64_t seed);

struct SampledValuation {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned truncation = 0;
  Number classical_sum;
  Number mean;
  InertVerdict verdict;
};

struct Comparison {
  ValuationReport expected;
  SampledValuation sampled;
};

Comparison compare_valuations(const Number& epsilon, const Gamble& g, std::uint64_t trials,
                              std::uint64_t seed, std::size_t depth);

}  // namespace coarse
