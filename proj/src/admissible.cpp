#include "pol/admissible.hpp"

#include <algorithm>
#include <stdexcept>

namespace pol {

namespace {

// Primes p <= k by a plain sieve; k is a tuple size, always small.
std::vector<std::uint64_t> primes_through(std::uint64_t k) {
  if (k < 2) return {};
  std::vector<char> flags(k + 1, 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= k; ++p) {
    if (!flags[p]) continue;
    out.push_back(p);
    for (std::uint64_t j = p * p; j <= k; j += p) flags[j] = 0;
  }
  return out;
}

}  // namespace

Tuple Tuple::of(std::vector<std::uint64_t> values) {
  if (values.empty()) throw std::domain_error("tuple must be nonempty");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw std::domain_error("tuple members must be distinct");
  Tuple t;
  t.values = std::move(values);
  return t;
}

AdmissibilityResult is_admissible(const Tuple& tuple) {
  const std::uint64_t k = tuple.size();
  AdmissibilityCertificate certificate;
  for (std::uint64_t p : primes_through(k)) {
    std::vector<char> seen(p, 0);
    std::vector<std::uint64_t> witness(p, 0);
    std::uint64_t covered = 0;
    for (std::uint64_t h : tuple.values) {
      const std::uint64_t r = h % p;
      if (!seen[r]) {
        seen[r] = 1;
        witness[r] = h;
        ++covered;
      }
    }
    if (covered == p) return Inadmissibility{p, std::move(witness)};
    for (std::uint64_t r = 0; r < p; ++r) {
      if (!seen[r]) {
        certificate.avoided.emplace_back(p, r);  // smallest avoided residue
        break;
      }
    }
  }
  return certificate;
}

std::optional<std::uint64_t> smallest_violating_prime(const Tuple& tuple) {
  const AdmissibilityResult result = is_admissible(tuple);
  if (const auto* bad = std::get_if<Inadmissibility>(&result)) return bad->prime;
  return std::nullopt;
}

bool check_certificate(const Tuple& tuple, const AdmissibilityCertificate& certificate) {
  const std::vector<std::uint64_t> primes = primes_through(tuple.size());
  if (certificate.avoided.size() != primes.size()) return false;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& [p, r] = certificate.avoided[i];
    if (p != primes[i] || r >= p) return false;
    for (std::uint64_t h : tuple.values)
      if (h % p == r) return false;
  }
  return true;
}

}  // namespace pol
