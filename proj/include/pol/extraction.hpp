// extraction.hpp — iterated pigeonhole extraction of admissible tuples from
// prefix sums, the exact worst-case generator-count recursion, and a
// desk-scale consecutive-prime witness search.
//
// The extraction filters the prefix sums of a generator tuple through the
// primes p_1, p_2, ... in turn: at step i it keeps the largest residue
// class mod p_i (ties go to the smallest residue), takes its least element
// as b_i, removes it, and continues with the rest. After k steps the picks
// {b_1..b_k} occupy at most n residue classes mod p_n for every n <= k, so
// the tuple is admissible, and every pairwise difference of the picks is a
// difference of two prefix sums, hence a sum of consecutive generators.
//
// required_generators(k) is the exact worst case for that greedy run.
// Working backward, a step whose chosen class must still deliver a_{i+1}
// survivors after the pick needs class size a_i with
//   a_k = 1,   a_i = p_{i+1} * (a_{i+1} - 1) + 2,
// and the initial pigeonhole needs N(k) = p_1 * (a_1 - 1) + 1 elements.
// N(k) grows at primorial scale, so values are exact big integers.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pol/admissible.hpp"
#include "pol/errors.hpp"
#include "pol/setcalc.hpp"
#include "pol/sieve.hpp"

namespace pol {

using BigInt = boost::multiprecision::cpp_int;

struct BoundTable {
  std::uint64_t k = 0;
  std::vector<BigInt> requirements;  // a_1..a_k, class size needed entering each step
  BigInt generators_needed;          // N(k)
};

BoundTable bound_table(std::uint64_t k);
BigInt required_generators(std::uint64_t k);

struct ExtractionStep {
  std::size_t step = 0;       // 1-based
  std::uint64_t prime = 0;    // p_step
  std::uint64_t residue = 0;  // chosen class h_step
  std::vector<std::size_t> survivors;  // chosen class, 0-based indices into partial, pick included
  std::size_t chosen_index = 0;
  std::uint64_t chosen_value = 0;
};

struct ExtractionTrace {
  std::vector<std::uint64_t> partial;  // the prefix sums the run filtered
  std::vector<ExtractionStep> steps;
  std::vector<std::uint64_t> chosen;   // b_1..b_k in pick order
};

struct ExtractionResult {
  Tuple tuple;  // the picks, sorted
  ExtractionTrace trace;
};

// Throws InsufficientGeneratorsError when a step has nothing left to pick
// from; that cannot happen once the tuple has required_generators(k)
// entries, and in practice far fewer suffice.
ExtractionResult extract_admissible(const GeneratorTuple& tuple, std::uint64_t k);

struct WitnessHit {
  std::uint64_t shift = 0;  // n
  std::uint64_t lower = 0;  // n + b_i
  std::uint64_t upper = 0;  // n + b_j, next prime after lower
  std::uint64_t gap = 0;
};

struct WitnessSearchResult {
  bool tuple_admissible = false;  // search is hopeless mod some prime otherwise
  std::optional<WitnessHit> hit;
};

// Smallest shift n <= shift_limit putting two tuple members onto consecutive
// primes. Runs for inadmissible tuples too; absence is data. A sieve
// covering shift_limit + max(tuple) is built unless one is supplied.
WitnessSearchResult pol_witness_search(const Tuple& tuple, std::uint64_t shift_limit,
                                       const SieveCache* sieve = nullptr);

}  // namespace pol
