// trials.hpp — seeded statistical harnesses pitting random IP_n / Delta_r
// configurations against empirical number sets, plus one-shot diagnostics
// (product cover, smallest-member echo).
//
// Failures are data, never errors: the infinitary theorems only guarantee
// intersections for astronomically large configurations, so every miss is
// recorded with the instance that produced it and can be re-audited from
// (seed, trial index) alone. Trial i draws from its own PRNG stream (see
// rng.hpp), so reports do not depend on the thread count.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pol/gapstats.hpp"

namespace pol {

struct TrialFailure {
  std::uint64_t trial = 0;
  std::vector<std::uint64_t> instance;  // generators (ip) or set elements (delta)
};

struct TrialReport {
  std::string kind;            // "ip", "even-ip", "delta"
  std::uint64_t size = 0;      // n generators or r elements
  std::uint64_t value_bound = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  SetKind set_kind = SetKind::polignac;
  std::uint64_t set_limit = 0;
  std::uint64_t set_threshold = 0;
  std::uint64_t successes = 0;
  std::vector<TrialFailure> failures;
};

// The exact instances a trial draws; exposed so failures can be audited
// independently of the harness.
std::vector<std::uint64_t> ip_trial_generators(std::uint64_t n, std::uint64_t gen_bound,
                                               std::uint64_t seed, std::uint64_t trial,
                                               bool even);
std::vector<std::uint64_t> delta_trial_elements(std::uint64_t r, std::uint64_t elem_bound,
                                                std::uint64_t seed, std::uint64_t trial);

// Per trial: n generators uniform in [1, gen_bound]; success iff the
// finite-sums set meets the target. n is capped at 25 (CapacityError).
TrialReport ip_trial(const EmpiricalNumberSet& target, std::uint64_t n,
                     std::uint64_t gen_bound, std::uint64_t trials, std::uint64_t seed,
                     unsigned threads = 1);

// Same, with generators drawn from the even numbers in [2, gen_bound].
TrialReport even_ip_trial(const EmpiricalNumberSet& target, std::uint64_t n,
                          std::uint64_t gen_bound, std::uint64_t trials, std::uint64_t seed,
                          unsigned threads = 1);

// Per trial: r distinct elements uniform in [1, elem_bound]; success iff the
// difference set meets the target. Requires r >= 2 and elem_bound >= r.
TrialReport delta_trial(const EmpiricalNumberSet& target, std::uint64_t r,
                        std::uint64_t elem_bound, std::uint64_t trials, std::uint64_t seed,
                        unsigned threads = 1);

struct ProductCoverReport {
  std::uint64_t k = 0;
  std::uint64_t m_limit = 0;
  SetKind set_kind = SetKind::polignac;
  std::uint64_t set_limit = 0;
  std::uint64_t set_threshold = 0;
  std::vector<std::uint64_t> uncovered;  // multiples of k <= k*m_limit missing from A*A
  std::uint64_t covered_count = 0;
};

ProductCoverReport product_cover_check(const EmpiricalNumberSet& set, std::uint64_t k,
                                       std::uint64_t m_limit);

struct EchoReport {
  SetKind set_kind = SetKind::polignac;
  std::uint64_t set_limit = 0;
  std::uint64_t set_threshold = 0;
  std::optional<std::uint64_t> smallest;  // absent when the set is empty
  std::uint64_t count = 0;                // occurrence count of the smallest member
};

EchoReport best_known_echo(const EmpiricalNumberSet& set);

}  // namespace pol
