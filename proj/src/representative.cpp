#include "coarse/representative.hpp"

#include "coarse/errors.hpp"

namespace coarse {

Number representative(const Cell& c, RepPolicy policy) {
  if (c.is_singleton()) return c.lower;
  switch (policy) {
    case RepPolicy::Min:
      if (!c.lower_closed) {
        throw SpecError("min representative is not attained on the lower-open cell " +
                        describe(c));
      }
      return c.lower;
    case RepPolicy::Max:
      return c.upper;
    case RepPolicy::MedianLower:
      if (c.domain == Domain::Integers) {
        // u_{floor((n+1)/2)} = lower + floor((n-1)/2)
        Integer offset = (c.size() - 1) / 2;
        return c.lower + Number(offset);
      }
      return (c.lower + c.upper) / 2;
  }
  throw Error("unknown representative policy");
}

Number margin_pos(const Cell& c, RepPolicy policy) { return c.upper - representative(c, policy); }

Number margin_neg(const Cell& c, RepPolicy policy) { return representative(c, policy) - c.lower; }

Number rep_of_cell(const Partition&, const Cell& c, RepPolicy policy) {
  return representative(c, policy);
}

Number rep_of_value(const Partition& p, const Number& x, RepPolicy policy) {
  return representative(p.cell_of(x), policy);
}

Number margin_pos(const Partition&, const Cell& c, RepPolicy policy) {
  return margin_pos(c, policy);
}

Number margin_neg(const Partition&, const Cell& c, RepPolicy policy) {
  return margin_neg(c, policy);
}

std::string to_string(RepPolicy policy) {
  switch (policy) {
    case RepPolicy::MedianLower: return "median";
    case RepPolicy::Min: return "min";
    case RepPolicy::Max: return "max";
  }
  return "unknown";
}

RepPolicy parse_policy(std::string_view name) {
  if (name == "median") return RepPolicy::MedianLower;
  if (name == "min") return RepPolicy::Min;
  if (name == "max") return RepPolicy::Max;
  throw ParseError("unknown representative policy '" + std::string(name) + "'");
}

}  // namespace coarse
