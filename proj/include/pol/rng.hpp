// rng.hpp — reproducible 64-bit PRNG used by every randomized harness.
//
// The generator is xorshift64 with the (13, 7, 17) shift triple:
//   s ^= s << 13;  s ^= s >> 7;  s ^= s << 17;
// Per-trial states derive from (master seed, trial index) through
// splitmix64, so trial i is its own stream and a report is a pure function
// of parameters and seed no matter how trials are scheduled. Draws use
// modulo reduction; the bias is negligible at the ranges used here and the
// sequence stays trivial to reproduce in another language.

#pragma once

#include <cstdint>

namespace pol {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// State for trial `index` under `master`. Never 0 (the xorshift64 fixed point).
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  const std::uint64_t s = splitmix64(master + kGolden * index);
  return s != 0 ? s : kGolden;
}

class XorShift64 {
 public:
  explicit XorShift64(std::uint64_t seed) : state_(seed != 0 ? seed : kGolden) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  // Uniform draw from [lo, hi], both ends included. Requires lo <= hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

}  // namespace pol
