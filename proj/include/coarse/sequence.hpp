#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coarse/number.hpp"

namespace coarse {

// A deterministic input stream: term(t) for t = 1, 2, ... A finite
// sequence reports its length; term() is never called past it.
struct Sequence {
  std::string name;
  std::function<Number(std::uint64_t)> term;
  std::optional<std::uint64_t> length;
};

Sequence constant(Number c);
// x_t = 1/t
Sequence harmonic();
// x_t = a * r^(t-1)
Sequence geometric(Number a, Number r);
// Per-round expected contribution of the St. Petersburg game: 1/2 forever.
Sequence st_petersburg_increments();
Sequence from_values(std::vector<Number> values);

}  // namespace coarse
