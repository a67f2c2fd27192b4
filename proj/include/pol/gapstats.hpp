// gapstats.hpp — occurrence statistics of consecutive-prime gaps and the
// finite stand-ins for the infinitary difference-of-primes sets.
//
// "Occurs infinitely often" is not observable, so every set here is
// parameterized by a limit X and a multiplicity threshold T, and both are
// carried in the result. Enlarging X or shrinking T never removes members.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pol/sieve.hpp"

namespace pol {

struct GapHistogram {
  std::uint64_t limit = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // gap value -> occurrences
  std::uint64_t total() const;                    // = pi(limit) - 1
};

enum class SetKind { polignac, kronecker, maillet };

std::string set_kind_name(SetKind kind);

// Finite truncation of a difference-of-primes set.
//   polignac:  m = p_{n+1} - p_n at least `threshold` times below `limit`
//   kronecker: even m <= max_value with >= threshold prime pairs (q, q+m),
//              q + m <= limit
//   maillet:   kronecker with threshold 1
// `counts` keeps the occurrence count for every candidate examined, members
// are the candidates whose count reaches the threshold.
struct EmpiricalNumberSet {
  SetKind kind = SetKind::polignac;
  std::uint64_t limit = 0;
  std::uint64_t threshold = 1;
  std::uint64_t max_value = 0;  // candidate cap for kronecker/maillet; 0 = none
  std::vector<std::uint64_t> members;  // sorted ascending
  std::map<std::uint64_t, std::uint64_t> counts;

  bool contains(std::uint64_t m) const;
  std::uint64_t max_member() const;  // 0 when empty
};

GapHistogram gap_histogram(const SieveCache& sieve, std::uint64_t up_to = 0);  // 0 = sieve limit
GapHistogram gap_histogram(std::uint64_t limit);

EmpiricalNumberSet empirical_polignac(const GapHistogram& hist, std::uint64_t threshold);
EmpiricalNumberSet empirical_polignac(const SieveCache& sieve, std::uint64_t up_to,
                                      std::uint64_t threshold);
EmpiricalNumberSet empirical_polignac(std::uint64_t limit, std::uint64_t threshold);

// Per-candidate scan of the prime bitset: O(max_value * pi(limit)) bit tests.
EmpiricalNumberSet empirical_kronecker(const SieveCache& sieve, std::uint64_t up_to,
                                       std::uint64_t max_value, std::uint64_t threshold,
                                       unsigned threads = 1);
EmpiricalNumberSet empirical_kronecker(std::uint64_t limit, std::uint64_t max_value,
                                       std::uint64_t threshold, unsigned threads = 1);

EmpiricalNumberSet empirical_maillet(const SieveCache& sieve, std::uint64_t up_to,
                                     std::uint64_t max_value, unsigned threads = 1);
EmpiricalNumberSet empirical_maillet(std::uint64_t limit, std::uint64_t max_value,
                                     unsigned threads = 1);

}  // namespace pol
