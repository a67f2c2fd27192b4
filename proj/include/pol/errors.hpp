// errors.hpp — exception types shared across the library.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pol {

// Thrown when an enumeration guard trips (e.g. the 2^N finite-sums cap).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The pigeonhole extraction entered a step with no surviving partial sums;
// guaranteed absent when the generator count reaches required_generators(k).
class InsufficientGeneratorsError : public std::runtime_error {
 public:
  explicit InsufficientGeneratorsError(std::size_t step)
      : std::runtime_error("insufficient generators: no surviving partial sums at step " +
                           std::to_string(step)),
        step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace pol
