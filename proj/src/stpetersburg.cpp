#include "coarse/stpetersburg.hpp"

#include <bit>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// k-th 64-bit word of trial t: a pure function of (seed, t, k).
std::uint64_t draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t k) {
  return mix64(mix64(seed + mix64(trial)) + k * 0x9e3779b97f4a7c15ULL);
}

// Each bit is a toss, 1 = tails.
unsigned draw_round(unsigned depth, std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t heads = 0;
  for (std::uint64_t k = 0; heads + 1 < depth; ++k) {
    const std::uint64_t w = draw(seed, trial, k);
    if (w != 0) {
      heads += static_cast<unsigned>(std::countr_zero(w));
      break;
    }
    heads += 64;
  }
  return heads + 1 < depth ? static_cast<unsigned>(heads + 1) : depth;
}

CoarseContext epsilon_context(const Number& epsilon, TieRule ties) {
  return CoarseContext(Partition({EpsilonGrowth{epsilon}, Domain::Reals}),
                       RepPolicy::MedianLower, ties);
}

}  // namespace

Integer payoff(unsigned round) {
  if (round == 0) throw DomainError("rounds start at 1");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, round - 1);
  return p;
}

Number outcome_probability(const Gamble& g, unsigned round) {
  if (round == 0 || round > g.depth) return Number(0);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, round == g.depth ? round - 1 : round);
  return Number(Integer(1), den);
}

Number truncated_expectation(const Gamble& g) {
  return Number(static_cast<unsigned long>(g.depth - 1)) / 2 + 1;
}

std::vector<Number> expected_increment_series(std::size_t depth) {
  if (depth == 0) throw SpecError("depth must be positive");
  return std::vector<Number>(depth, Number(1, 2));
}

std::vector<unsigned> sample_rounds(const Gamble& g, std::uint64_t trials, std::uint64_t seed) {
  if (g.depth == 0) throw SpecError("truncation depth must be positive");
  if (trials == 0) throw SpecError("trials must be positive");
  std::vector<unsigned> rounds(trials);
  for (std::uint64_t t = 0; t < trials; ++t) rounds[t] = draw_round(g.depth, seed, t);
  return rounds;
}

std::vector<Number> sample_gamble(const Gamble& g, std::uint64_t trials, std::uint64_t seed) {
  std::vector<Number> out;
  out.reserve(trials);
  for (unsigned n : sample_rounds(g, trials, seed)) out.emplace_back(payoff(n));
  return out;
}

ValuationReport coarse_value(const Number& epsilon, std::size_t depth) {
  ValuationReport r;
  r.epsilon = epsilon;
  r.depth = depth;
  const auto increments = expected_increment_series(depth);
  Number running = 0;
  r.classical_partial_sums.reserve(depth);
  for (const auto& x : increments) {
    running += x;
    r.classical_partial_sums.push_back(running);
  }

  const CoarseContext strict = epsilon_context(epsilon, TieRule::StrictMargin);
  const CoarseContext membership = epsilon_context(epsilon, TieRule::Membership);
  const Sequence stream = from_values(increments);
  r.coarse_verdict = detect_inert_stream(strict, stream, depth, Number(1, 2));
  r.membership_verdict = detect_inert_stream(membership, stream, depth);

  r.formula_index = floor(Number(epsilon / 2)).get_ui() + 1;
  r.scan_index = first_absorbing_cell(strict.partition(), RepPolicy::MedianLower,
                                      strict.normalize(Number(1, 2)), true);
  r.agreement = r.scan_index && *r.scan_index == r.formula_index;
  return r;
}

StreamComparison compare_streams(const CoarseContext& ctx, const Gamble& g, std::size_t depth,
                                 std::uint64_t trials, std::uint64_t seed) {
  StreamComparison c;
  auto increments = expected_increment_series(depth);
  c.classical_expected_sum = Number(static_cast<unsigned long>(depth)) / 2;
  c.expected_verdict = detect_inert_stream(ctx, from_values(std::move(increments)), depth);

  auto payoffs = sample_gamble(g, trials, seed);
  c.classical_sampled_sum = 0;
  for (const auto& x : payoffs) c.classical_sampled_sum += x;
  c.sampled_verdict = detect_inert_stream(ctx, from_values(std::move(payoffs)), trials);
  return c;
}

Comparison compare_valuations(const Number& epsilon, const Gamble& g, std::uint64_t trials,
                              std::uint64_t seed, std::size_t depth) {
  Comparison out;
  out.expected = coarse_value(epsilon, depth);
  const CoarseContext strict = epsilon_context(epsilon, TieRule::StrictMargin);
  auto payoffs = sample_gamble(g, trials, seed);
  SampledValuation& s = out.sampled;
  s.trials = trials;
  s.seed = seed;
  s.truncation = g.depth;
  s.classical_sum = 0;
  for (const auto& x : payoffs) s.classical_sum += x;
  s.mean = s.classical_sum / Number(Integer(static_cast<unsigned long>(trials)));
  s.verdict = detect_inert_stream(strict, from_values(std::move(payoffs)), trials);
  return out;
}

}  // namespace coarse
