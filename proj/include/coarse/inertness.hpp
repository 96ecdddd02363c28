#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "coarse/number.hpp"
#include "coarse/ops.hpp"
#include "coarse/partition.hpp"
#include "coarse/representative.hpp"
#include "coarse/sequence.hpp"

namespace coarse {

// S_n == value and psi(S_n) == cell for every examined n >= step, and step is
// minimal. `certified` is set only by the bound-based early exit, which
// proves the sums never move again; otherwise the claim covers the observed
// window only.
struct InertAt {
  std::size_t step = 0;
  CellIndex cell = 0;
  Number value;
  bool certified = false;

  friend bool operator==(const InertAt&, const InertAt&) = default;
};

// No stable suffix within `horizon` steps. `cell_advances` counts the steps
// at which the partial sum moved to a strictly higher cell, as evidence of
// (coarse) divergence.
struct NoVerdict {
  std::size_t horizon = 0;
  std::size_t cell_advances = 0;

  friend bool operator==(const NoVerdict&, const NoVerdict&) = default;
};

using InertVerdict = std::variant<InertAt, NoVerdict>;

inline bool is_inert(const InertVerdict& v) { return std::holds_alternative<InertAt>(v); }

// Inert over the observed window when the last step is a fixed point
// (S_end == S_end-1); NoVerdict otherwise. Throws Error on an empty trace.
InertVerdict detect_inert_trace(const FoldTrace& trace);

struct StreamDetection {
  InertVerdict verdict;
  FoldTrace trace;
};

// Folds gen step by step for at most `horizon` steps (fewer when gen is
// finite). With an increment bound b, every input is checked to lie in
// [origin, b] and the fold stops as soon as the current cell's positive
// margin strictly exceeds phi(psi(b)): no admissible input can move the sum
// again, so the verdict is certified.
StreamDetection scan_stream(const CoarseContext& ctx, const Sequence& gen,
                            std::uint64_t horizon,
                            const std::optional<Number>& increment_bound = std::nullopt);

InertVerdict detect_inert_stream(const CoarseContext& ctx, const Sequence& gen,
                                 std::uint64_t horizon,
                                 const std::optional<Number>& increment_bound = std::nullopt);

// Smallest cell index whose positive margin exceeds (strict) or reaches
// (non-strict) inc_rep; nullopt when no cell qualifies.
std::optional<CellIndex> first_absorbing_cell(const Partition& p, RepPolicy policy,
                                              const Number& inc_rep, bool strict);

}  // namespace coarse
