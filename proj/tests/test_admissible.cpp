#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "pol/admissible.hpp"
#include "pol/rng.hpp"

namespace {

pol::Tuple make(std::vector<std::uint64_t> v) { return pol::Tuple::of(std::move(v)); }

std::vector<std::uint64_t> random_distinct(pol::XorShift64& rng, std::size_t k,
                                           std::uint64_t bound) {
  std::vector<std::uint64_t> values;
  while (values.size() < k) {
    const std::uint64_t v = rng.uniform(0, bound);
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  return values;
}

}  // namespace

TEST_CASE("admissibility hand examples") {
  const auto even_pair = pol::is_admissible(make({0, 2}));
  REQUIRE(pol::admissible(even_pair));
  CHECK(std::get<pol::AdmissibilityCertificate>(even_pair).avoided ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}});

  const auto covers_mod3 = pol::is_admissible(make({0, 2, 4}));
  REQUIRE_FALSE(pol::admissible(covers_mod3));
  const auto& bad = std::get<pol::Inadmissibility>(covers_mod3);
  CHECK(bad.prime == 3);
  REQUIRE(bad.class_witnesses.size() == 3);
  for (std::uint64_t r = 0; r < 3; ++r) CHECK(bad.class_witnesses[r] % 3 == r);

  const auto spaced = pol::is_admissible(make({0, 4, 6}));
  REQUIRE(pol::admissible(spaced));
  CHECK(std::get<pol::AdmissibilityCertificate>(spaced).avoided ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}, {3, 2}});
}

TEST_CASE("smallest violating prime") {
  CHECK(pol::smallest_violating_prime(make({0, 2, 4})) == 3);
  CHECK(pol::smallest_violating_prime(make({0, 2})) == std::nullopt);
  CHECK(pol::smallest_violating_prime(make({0, 1})) == 2);
}

TEST_CASE("tuple validation") {
  CHECK_THROWS_AS(make({}), std::domain_error);
  CHECK_THROWS_AS(make({3, 3}), std::domain_error);
  CHECK(make({6, 0, 4}).values == std::vector<std::uint64_t>{0, 4, 6});
}

TEST_CASE("singleton tuples are trivially admissible") {
  const auto result = pol::is_admissible(make({7}));
  REQUIRE(pol::admissible(result));
  const auto& cert = std::get<pol::AdmissibilityCertificate>(result);
  CHECK(cert.avoided.empty());  // no primes <= 1
  CHECK(pol::check_certificate(make({7}), cert));
}

TEST_CASE("ties resolve to the smallest avoided residue") {
  const auto result = pol::is_admissible(make({0, 6}));
  REQUIRE(pol::admissible(result));
  // residues mod 2: both 0 -> avoid 1; mod 2 is the only prime <= 2
  CHECK(std::get<pol::AdmissibilityCertificate>(result).avoided ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}});
}

TEST_CASE("agreement with the exhaustive oracle") {
  pol::XorShift64 rng(21);
  for (int round = 0; round < 300; ++round) {
    const std::size_t k = 1 + rng.next() % 12;
    const auto values = random_distinct(rng, k, 10000);
    const pol::Tuple tuple = make(values);
    const auto result = pol::is_admissible(tuple);
    REQUIRE(pol::admissible(result) == oracle::naive_admissible(tuple.values));
    if (pol::admissible(result))
      REQUIRE(pol::check_certificate(tuple, std::get<pol::AdmissibilityCertificate>(result)));
  }
}

TEST_CASE("admissibility is translation invariant") {
  pol::XorShift64 rng(22);
  for (int round = 0; round < 100; ++round) {
    const std::size_t k = 1 + rng.next() % 10;
    const auto values = random_distinct(rng, k, 2000);
    const bool base = pol::admissible(pol::is_admissible(make(values)));
    const std::uint64_t shift = rng.uniform(1, 1000);
    std::vector<std::uint64_t> shifted = values;
    for (auto& v : shifted) v += shift;
    REQUIRE(pol::admissible(pol::is_admissible(make(shifted))) == base);
  }
}

TEST_CASE("subsets of admissible tuples stay admissible") {
  pol::XorShift64 rng(23);
  int seen = 0;
  for (int round = 0; round < 3000 && seen < 100; ++round) {
    const std::size_t k = 2 + rng.next() % 9;
    auto values = random_distinct(rng, k, 500);
    for (auto& v : values) v *= 2;  // even tuples are admissible far more often
    if (!pol::admissible(pol::is_admissible(make(values)))) continue;
    ++seen;
    std::vector<std::uint64_t> subset;
    for (std::uint64_t v : values)
      if (rng.next() % 2 == 0) subset.push_back(v);
    if (subset.empty()) subset.push_back(values.front());
    REQUIRE(pol::admissible(pol::is_admissible(make(subset))));
  }
  CHECK(seen == 100);
}

TEST_CASE("tampered certificates fail verification") {
  const pol::Tuple tuple = make({0, 4, 6});
  auto cert = std::get<pol::AdmissibilityCertificate>(pol::is_admissible(tuple));
  REQUIRE(pol::check_certificate(tuple, cert));

  auto tampered = cert;
  tampered.avoided[1].second = 0;  // 0 and 6 are both 0 mod 3
  CHECK_FALSE(pol::check_certificate(tuple, tampered));

  auto missing = cert;
  missing.avoided.pop_back();
  CHECK_FALSE(pol::check_certificate(tuple, missing));
}
