// setcalc.hpp — finite-sums sets, difference sets, and bounded-gap
// (syndeticity) diagnostics over finite truncations.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pol/errors.hpp"

namespace pol {

// The generator sequence x_1..x_N of a finite-sums set. Repeats allowed,
// every entry >= 1.
struct GeneratorTuple {
  std::vector<std::uint64_t> generators;

  static GeneratorTuple of(std::vector<std::uint64_t> values);
  std::size_t size() const { return generators.size(); }
};

// Enumeration guard: the sum set can reach 2^N - 1 distinct values.
inline constexpr std::size_t kMaxFiniteSumGenerators = 25;

// All sums over nonempty subsequences of the generators, deduplicated.
struct FiniteSumSet {
  GeneratorTuple source;
  std::vector<std::uint64_t> sums;  // sorted, distinct

  bool contains(std::uint64_t value) const;
};

FiniteSumSet finite_sums(const GeneratorTuple& tuple);  // CapacityError beyond the guard

// The N prefix sums x_1, x_1+x_2, ..., strictly increasing.
std::vector<std::uint64_t> partial_sums(const GeneratorTuple& tuple);

// All positive pairwise differences. Input values are treated as a set
// (duplicates collapse); at least two distinct values required.
std::vector<std::uint64_t> difference_set(std::vector<std::uint64_t> values);

inline constexpr std::uint64_t kNoCutoff = ~0ull;

// Per-element bounded-gap diagnostic for a set A on the window [1, bound].
//   additive:        smallest t >= 0 with n + t in A
//   multiplicative:  smallest s >= 1 with n * s in A
// Elements with no witness within the cutoff (or within A's range) land in
// `failures`; `worst` is the largest witness among the found ones. Every
// witness is re-validated against A on construction.
struct SyndeticityReport {
  enum class Mode { additive, multiplicative };

  Mode mode = Mode::additive;
  std::uint64_t bound = 0;
  std::uint64_t cutoff = kNoCutoff;
  std::vector<std::uint64_t> witnesses;  // witnesses[n-1], valid iff found[n-1]
  std::vector<char> found;
  std::vector<std::uint64_t> failures;  // n with no witness
  std::uint64_t worst = 0;
  std::map<std::uint64_t, std::uint64_t> witness_histogram;

  std::uint64_t witnessed() const { return bound - failures.size(); }
};

// `sorted_set` must be sorted ascending with distinct members, nonempty.
SyndeticityReport additive_gap_bound(const std::vector<std::uint64_t>& sorted_set,
                                     std::uint64_t bound, std::uint64_t cutoff = kNoCutoff);
SyndeticityReport multiplicative_gap_bound(const std::vector<std::uint64_t>& sorted_set,
                                           std::uint64_t bound, std::uint64_t factor_cutoff);

// Smallest x <= search_bound with shape + x fully inside the set, if any.
// A finite search: presence is a witness, absence proves nothing.
std::optional<std::uint64_t> thickness_window(const std::vector<std::uint64_t>& sorted_set,
                                              const std::vector<std::uint64_t>& shape,
                                              std::uint64_t search_bound);

}  // namespace pol
