#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coarse {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid partition spec, policy or configuration.
class SpecError : public Error {
 public:
  using Error::Error;
};

// A value outside the base set of a partition (below the origin,
// non-integer in the integer domain, off-lattice for singletons).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An intermediate value beyond the cells of a finite partition.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Wraps an error raised while folding, remembering the 1-based step.
class StepError : public Error {
 public:
  StepError(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace coarse
