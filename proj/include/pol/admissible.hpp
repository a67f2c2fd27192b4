// admissible.hpp — admissibility of integer tuples with verifiable
// residue-class certificates.
//
// A tuple of k distinct non-negative integers is admissible when, for every
// prime p, some residue class mod p contains none of its members. Only
// p <= k can fail (k values cannot cover p > k classes), so a certificate
// lists one avoided residue per prime p <= k and is checkable in O(k) per
// prime. Ties between avoided residues resolve to the smallest, making
// certificates canonical.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace pol {

// Sorted distinct non-negative integers h_1 < ... < h_k.
struct Tuple {
  std::vector<std::uint64_t> values;

  static Tuple of(std::vector<std::uint64_t> values);  // sorts, rejects duplicates
  std::size_t size() const { return values.size(); }
};

struct AdmissibilityCertificate {
  // (prime p, avoided residue r), ascending in p, one entry per prime <= k.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> avoided;
};

struct Inadmissibility {
  std::uint64_t prime = 0;  // smallest prime whose residue classes are all hit
  // class_witnesses[r] = a tuple member congruent to r mod prime
  std::vector<std::uint64_t> class_witnesses;
};

using AdmissibilityResult = std::variant<AdmissibilityCertificate, Inadmissibility>;

AdmissibilityResult is_admissible(const Tuple& tuple);

inline bool admissible(const AdmissibilityResult& result) {
  return std::holds_alternative<AdmissibilityCertificate>(result);
}

std::optional<std::uint64_t> smallest_violating_prime(const Tuple& tuple);

// Re-checks a certificate from scratch: every prime <= k is present in
// ascending order and every listed residue really is avoided.
bool check_certificate(const Tuple& tuple, const AdmissibilityCertificate& certificate);

}  // namespace pol
