#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coarse/number.hpp"
#include "coarse/partition.hpp"
#include "coarse/representative.hpp"

namespace coarse {

// How an exact sum is mapped back to a cell when it sits exactly on a real
// cell's closed upper bound shared with the next cell.
//   Membership:   the sum stays in the cell that contains it.
//   StrictMargin: the sum moves on to the next cell, so a cell absorbs an
//                 increment only when its margin strictly exceeds it.
// Both rules agree on integer partitions. Raw operands are always
// normalised by plain membership.
enum class TieRule { Membership, StrictMargin };

class CoarseContext {
 public:
  // Throws SpecError when the policy is not usable on the partition (Min on
  // real partitions with lower-open cells).
  CoarseContext(Partition partition, RepPolicy policy, TieRule ties = TieRule::Membership);

  const Partition& partition() const { return partition_; }
  RepPolicy policy() const { return policy_; }
  TieRule ties() const { return ties_; }

  // phi(psi(x)).
  Number normalize(const Number& x) const;
  // Cell receiving an exact inner sum, honouring the tie rule. Throws
  // RangeError naming the value when no cell holds it.
  Cell recoarsen(const Number& sum) const;

 private:
  Partition partition_;
  RepPolicy policy_;
  TieRule ties_;
};

// x (+) y = phi(psi(phi(psi(x)) + phi(psi(y)))).
Number rep_add(const CoarseContext& ctx, const Number& x, const Number& y);
// G_i [+] G_k = psi(phi(G_i) + phi(G_k)); returns the resulting index.
CellIndex cell_add(const CoarseContext& ctx, CellIndex i, CellIndex k);
// G_i [+] G_k == G_i.
bool absorbs(const CoarseContext& ctx, CellIndex i, CellIndex k);
// x (+) y != x + y.
bool distorted(const CoarseContext& ctx, const Number& x, const Number& y);

struct FoldStep {
  std::size_t n = 0;
  Number x;
  CellIndex x_cell = 0;
  Number s;
  CellIndex s_cell = 0;
  // s_cell unchanged from the previous step; false on step 1.
  bool absorbed = false;

  friend bool operator==(const FoldStep&, const FoldStep&) = default;
};

using FoldTrace = std::vector<FoldStep>;

// Incremental left fold: S_1 = x_1, S_n = S_{n-1} (+) x_n.
class CoarseFold {
 public:
  explicit CoarseFold(const CoarseContext& ctx) : ctx_(&ctx) {}

  // Throws StepError carrying the step number.
  const FoldStep& push(const Number& x);

  const FoldTrace& trace() const { return trace_; }
  FoldTrace take() && { return std::move(trace_); }

 private:
  const CoarseContext* ctx_;
  FoldTrace trace_;
};

// Strictly left-associative fold of a non-empty sequence.
FoldTrace coarse_fold(const CoarseContext& ctx, std::span<const Number> xs);

std::string to_string(TieRule ties);
// "membership" | "strict"; throws ParseError.
TieRule parse_ties(std::string_view name);

}  // namespace coarse
