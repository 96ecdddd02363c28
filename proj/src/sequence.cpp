#include "coarse/sequence.hpp"

#include <memory>

namespace coarse {

Sequence constant(Number c) {
  return {"constant " + to_string(c), [c](std::uint64_t) { return c; }, std::nullopt};
}

Sequence harmonic() {
  return {"harmonic",
          [](std::uint64_t t) { return Number(1, static_cast<unsigned long>(t)); },
          std::nullopt};
}

Sequence geometric(Number a, Number r) {
  std::string name = "geometric " + to_string(a) + " * (" + to_string(r) + ")^(t-1)";
  return {std::move(name),
          [a, r](std::uint64_t t) {
            Integer num;
            Integer den;
            mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), t - 1);
            mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), t - 1);
            Number power(num, den);
            power.canonicalize();
            return Number(a * power);
          },
          std::nullopt};
}

Sequence st_petersburg_increments() {
  Sequence s = constant(Number(1, 2));
  s.name = "st-petersburg expected increments";
  return s;
}

Sequence from_values(std::vector<Number> values) {
  auto shared = std::make_shared<const std::vector<Number>>(std::move(values));
  const std::uint64_t n = shared->size();
  return {"values", [shared](std::uint64_t t) { return (*shared)[t - 1]; }, n};
}

}  // namespace coarse
