#include "coarse/inertness.hpp"

#include <variant>

#include "coarse/errors.hpp"
#include "search.hpp"

namespace coarse {

namespace {

std::size_t cell_advances(const FoldTrace& trace) {
  std::size_t count = 0;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].s_cell > trace[i - 1].s_cell) ++count;
  }
  return count;
}

}  // namespace

InertVerdict detect_inert_trace(const FoldTrace& trace) {
  if (trace.empty()) throw Error("empty trace");
  const std::size_t len = trace.size();
  if (len < 2 || trace[len - 1].s != trace[len - 2].s) {
    return NoVerdict{len, cell_advances(trace)};
  }
  std::size_t first = len - 1;
  while (first > 0 && trace[first - 1].s == trace.back().s) --first;
  return InertAt{trace[first].n, trace.back().s_cell, trace.back().s, false};
}

StreamDetection scan_stream(const CoarseContext& ctx, const Sequence& gen, std::uint64_t horizon,
                            const std::optional<Number>& increment_bound) {
  if (horizon == 0) throw SpecError("horizon must be positive");
  const auto& p = ctx.partition();
  std::optional<Number> bound_rep;
  if (increment_bound) {
    if (p.origin() < 0) {
      throw SpecError("increment bound needs a partition of nonnegative values");
    }
    bound_rep = ctx.normalize(*increment_bound);
  }

  const std::uint64_t steps = gen.length ? std::min(horizon, *gen.length) : horizon;
  if (steps == 0) throw Error("empty sequence");
  CoarseFold fold(ctx);
  for (std::uint64_t t = 1; t <= steps; ++t) {
    const Number x = gen.term(t);
    if (increment_bound && x > *increment_bound) {
      throw StepError(t, "input " + x.get_str() + " exceeds the increment bound " +
                             increment_bound->get_str());
    }
    const FoldStep& step = fold.push(x);
    if (bound_rep) {
      const Cell cell = p.cell_at(step.s_cell);
      if (margin_pos(cell, ctx.policy()) > *bound_rep) {
        Number value = representative(cell, ctx.policy());
        std::size_t first = step.s == value ? step.n : step.n + 1;
        return {InertAt{first, cell.index, std::move(value), true}, std::move(fold).take()};
      }
    }
  }
  FoldTrace trace = std::move(fold).take();
  InertVerdict verdict = detect_inert_trace(trace);
  return {std::move(verdict), std::move(trace)};
}

InertVerdict detect_inert_stream(const CoarseContext& ctx, const Sequence& gen,
                                 std::uint64_t horizon,
                                 const std::optional<Number>& increment_bound) {
  return scan_stream(ctx, gen, horizon, increment_bound).verdict;
}

std::optional<CellIndex> first_absorbing_cell(const Partition& p, RepPolicy policy,
                                              const Number& inc_rep, bool strict) {
  if (inc_rep < 0) throw SpecError("increment representative must be nonnegative");
  auto qualifies = [&](CellIndex i) {
    Number m = margin_pos(p.cell_at(i), policy);
    return strict ? m > inc_rep : m >= inc_rep;
  };

  if (auto count = p.cell_count()) {
    for (CellIndex i = 1; i <= *count; ++i) {
      if (qualifies(i)) return i;
    }
    return std::nullopt;
  }
  if (qualifies(1)) return 1;
  if (!p.unbounded_widths() || policy == RepPolicy::Max) {
    // Every cell has the same margin as cell 1 (FixedWidth, Singleton) or
    // the margin is identically zero.
    return std::nullopt;
  }
  // From cell 2 on, margins of the growing families are nondecreasing and
  // unbounded.
  return detail::first_true(qualifies, 2);
}

}  // namespace coarse
