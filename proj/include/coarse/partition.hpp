#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coarse/number.hpp"

namespace coarse {

enum class Domain { Integers, Reals };

// Cells are numbered from 1.
using CellIndex = std::uint64_t;

// One grain of a partition: an interval of integers or of rationals.
//
// Integer cells are always closed on both sides and hold the integers in
// [lower, upper]. Real cells produced by the generators are [0, b] for the
// first cell and (a, b] afterwards.
struct Cell {
  CellIndex index = 0;
  Number lower;
  Number upper;
  bool lower_closed = true;
  bool upper_closed = true;
  Domain domain = Domain::Integers;

  bool contains(const Number& x) const;
  bool is_singleton() const { return lower == upper; }
  // Number of integers in an integer cell.
  Integer size() const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Partition families.
struct FixedWidth {
  std::uint64_t width = 1;
};
struct Fibonacci {};
// Finite integer partition from 0 with the listed cell sizes.
struct WidthList {
  std::vector<std::uint64_t> widths;
};
// [0, 1/2], then (max G_{i-1}, max G_{i-1} + i/eps].
struct EpsilonGrowth {
  Number epsilon;
};
// Ascending boundaries b0 < b1 < ... < bk. Integer domain: cell i holds
// b_{i-1} .. b_i - 1. Real domain: [b0, b1], (b1, b2], ...
struct ExplicitBounds {
  std::vector<Number> boundaries;
};
// Cells listed one by one as [lo, hi]; may overlap or leave gaps, which
// validate() reports. Real cells after the first are lower-open.
struct ExplicitCells {
  std::vector<std::pair<Number, Number>> cells;
};
// The singleton partition of the lattice {0, h, 2h, ...}.
struct Singleton {
  Number step{1};
};

using PartitionKind = std::variant<FixedWidth, Fibonacci, WidthList, EpsilonGrowth,
                                   ExplicitBounds, ExplicitCells, Singleton>;

struct PartitionSpec {
  PartitionKind kind;
  Domain domain = Domain::Integers;
};

// An ordered family of disjoint cells. Cells of the generator families are
// pure functions of their index, so a Partition is immutable and can be
// queried for any index from any thread.
class Partition {
 public:
  // Throws SpecError naming the offending field.
  explicit Partition(PartitionSpec spec);

  const PartitionSpec& spec() const { return spec_; }
  Domain domain() const { return spec_.domain; }
  const Number& origin() const { return origin_; }
  // nullopt for the unbounded generator families.
  std::optional<CellIndex> cell_count() const;
  // True when cell widths grow without bound (Fibonacci, EpsilonGrowth).
  bool unbounded_widths() const;

  // Throws DomainError for index 0 and RangeError past a finite partition.
  Cell cell_at(CellIndex index) const;
  // Unique cell containing x. Throws DomainError when x is not in the base
  // set and RangeError when x lies beyond a finite partition.
  Cell cell_of(const Number& x) const;
  // Non-throwing variant of cell_of; nullopt when no cell contains x.
  std::optional<Cell> find(const Number& x) const;

 private:
  std::optional<CellIndex> index_of(const Number& x) const;
  void check_domain(const Number& x) const;

  PartitionSpec spec_;
  Number origin_;
  // Explicit shapes are lowered to a cell list once at construction.
  std::vector<Cell> finite_cells_;
  bool well_formed_ = true;
};

Partition build_partition(PartitionSpec spec);
Cell cell_at(const Partition& p, CellIndex index);
Cell cell_of(const Partition& p, const Number& x);

enum class Violation { Shape, Disjointness, Coverage, Ordering };

struct Finding {
  Violation kind;
  CellIndex cell;  // the later cell of the offending pair
  std::string detail;
};

struct ValidationReport {
  CellIndex checked = 0;
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
};

// Checks cells 1..up_to (clamped to a finite partition's size).
ValidationReport validate(const Partition& p, CellIndex up_to);

std::string to_string(Domain d);
std::string to_string(Violation v);
std::string describe(const Cell& c);

}  // namespace coarse
