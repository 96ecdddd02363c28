#pragma once

#include <cstdint>
#include <optional>

namespace coarse::detail {

// Smallest i in [lo, limit] with pred(i) true, for a predicate that is
// monotone (false...false true...true). Gallops upward, then bisects.
template <typename Pred>
std::optional<std::uint64_t> first_true(Pred&& pred, std::uint64_t lo = 1,
                                        std::uint64_t limit = std::uint64_t{1} << 62) {
  if (lo > limit) return std::nullopt;
  if (pred(lo)) return lo;
  std::uint64_t bad = lo;
  std::uint64_t step = 1;
  std::uint64_t good = 0;
  while (true) {
    std::uint64_t probe = (limit - bad > step) ? bad + step : limit;
    if (pred(probe)) {
      good = probe;
      break;
    }
    if (probe == limit) return std::nullopt;
    bad = probe;
    step *= 2;
  }
  while (good - bad > 1) {
    std::uint64_t mid = bad + (good - bad) / 2;
    if (pred(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

}  // namespace coarse::detail
