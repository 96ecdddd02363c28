#include "coarse/ops.hpp"

#include <variant>

#include "coarse/errors.hpp"

namespace coarse {

CoarseContext::CoarseContext(Partition partition, RepPolicy policy, TieRule ties)
    : partition_(std::move(partition)), policy_(policy), ties_(ties) {
  if (policy_ == RepPolicy::Min && partition_.domain() == Domain::Reals &&
      !std::holds_alternative<Singleton>(partition_.spec().kind)) {
    throw SpecError("min representative is undefined on lower-open real cells");
  }
}

Number CoarseContext::normalize(const Number& x) const {
  return representative(partition_.cell_of(x), policy_);
}

Cell CoarseContext::recoarsen(const Number& sum) const {
  auto cell = partition_.find(sum);
  if (!cell) throw RangeError("sum " + sum.get_str() + " lies outside every cell");
  if (ties_ == TieRule::StrictMargin && cell->domain == Domain::Reals && !cell->is_singleton() &&
      cell->upper == sum) {
    auto count = partition_.cell_count();
    if (!count || cell->index < *count) {
      Cell next = partition_.cell_at(cell->index + 1);
      if (!next.lower_closed && next.lower == sum) return next;
    }
  }
  return *cell;
}

Number rep_add(const CoarseContext& ctx, const Number& x, const Number& y) {
  const Number sum = ctx.normalize(x) + ctx.normalize(y);
  return representative(ctx.recoarsen(sum), ctx.policy());
}

CellIndex cell_add(const CoarseContext& ctx, CellIndex i, CellIndex k) {
  const auto& p = ctx.partition();
  const Number sum =
      representative(p.cell_at(i), ctx.policy()) + representative(p.cell_at(k), ctx.policy());
  return ctx.recoarsen(sum).index;
}

bool absorbs(const CoarseContext& ctx, CellIndex i, CellIndex k) {
  return cell_add(ctx, i, k) == i;
}

bool distorted(const CoarseContext& ctx, const Number& x, const Number& y) {
  return rep_add(ctx, x, y) != x + y;
}

const FoldStep& CoarseFold::push(const Number& x) {
  const std::size_t n = trace_.size() + 1;
  try {
    const auto& p = ctx_->partition();
    FoldStep step;
    step.n = n;
    step.x = x;
    step.x_cell = p.cell_of(x).index;
    if (trace_.empty()) {
      step.s = x;
      step.s_cell = step.x_cell;
    } else {
      const FoldStep& prev = trace_.back();
      step.s = rep_add(*ctx_, prev.s, x);
      step.s_cell = p.cell_of(step.s).index;
      step.absorbed = step.s_cell == prev.s_cell;
    }
    trace_.push_back(std::move(step));
  } catch (const StepError&) {
    throw;
  } catch (const Error& e) {
    throw StepError(n, e.what());
  }
  return trace_.back();
}

FoldTrace coarse_fold(const CoarseContext& ctx, std::span<const Number> xs) {
  if (xs.empty()) throw Error("empty sequence");
  CoarseFold fold(ctx);
  for (const auto& x : xs) fold.push(x);
  return std::move(fold).take();
}

std::string to_string(TieRule ties) {
  return ties == TieRule::Membership ? "membership" : "strict";
}

TieRule parse_ties(std::string_view name) {
  if (name == "membership") return TieRule::Membership;
  if (name == "strict") return TieRule::StrictMargin;
  throw ParseError("unknown tie rule '" + std::string(name) + "'");
}

}  // namespace coarse
