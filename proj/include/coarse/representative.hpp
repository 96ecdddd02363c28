#pragma once

#include <string>
#include <string_view>

#include "coarse/number.hpp"
#include "coarse/partition.hpp"

namespace coarse {

// Positional representative of a cell.
//   MedianLower: the floor((n+1)/2)-th smallest element of an integer cell
//                of size n; the midpoint of a real cell.
//   Min / Max:   the cell's minimum / maximum.
enum class RepPolicy { MedianLower, Min, Max };

// phi(c). Throws SpecError for Min on a lower-open real cell, whose minimum
// is not attained.
Number representative(const Cell& c, RepPolicy policy);

// max c - phi(c).
Number margin_pos(const Cell& c, RepPolicy policy);
// phi(c) - min c; infimum-based for lower-open real cells.
Number margin_neg(const Cell& c, RepPolicy policy);

Number rep_of_cell(const Partition& p, const Cell& c, RepPolicy policy);
// phi(psi(x)).
Number rep_of_value(const Partition& p, const Number& x, RepPolicy policy);
Number margin_pos(const Partition& p, const Cell& c, RepPolicy policy);
Number margin_neg(const Partition& p, const Cell& c, RepPolicy policy);

std::string to_string(RepPolicy policy);
// "median" | "min" | "max"; throws ParseError.
RepPolicy parse_policy(std::string_view name);

}  // namespace coarse
