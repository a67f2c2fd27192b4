#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "pol/rng.hpp"
#include "pol/setcalc.hpp"

namespace {

pol::GeneratorTuple tuple_of(std::vector<std::uint64_t> v) {
  return pol::GeneratorTuple::of(std::move(v));
}

}  // namespace

TEST_CASE("finite sums hand examples") {
  CHECK(pol::finite_sums(tuple_of({2, 2, 2})).sums == std::vector<std::uint64_t>{2, 4, 6});
  CHECK(pol::finite_sums(tuple_of({1, 2, 4})).sums ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(pol::finite_sums(tuple_of({3, 3})).sums == std::vector<std::uint64_t>{3, 6});
  CHECK(pol::finite_sums(tuple_of({5})).sums == std::vector<std::uint64_t>{5});

  CHECK_THROWS_AS(pol::finite_sums(tuple_of(std::vector<std::uint64_t>(26, 1))),
                  pol::CapacityError);
  CHECK_THROWS_AS(tuple_of({}), std::domain_error);
  CHECK_THROWS_AS(tuple_of({3, 0}), std::domain_error);
}

TEST_CASE("finite sums match the bitmask oracle") {
  pol::XorShift64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.next() % 9;
    std::vector<std::uint64_t> gens(n);
    for (auto& g : gens) g = rng.uniform(1, 40);
    REQUIRE(pol::finite_sums(tuple_of(gens)).sums == oracle::naive_subset_sums(gens));
  }
}

TEST_CASE("finite sums respect prefix/suffix decomposition") {
  pol::XorShift64 rng(12);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + rng.next() % 9;
    std::vector<std::uint64_t> gens(n);
    for (auto& g : gens) g = rng.uniform(1, 30);
    const auto whole = pol::finite_sums(tuple_of(gens)).sums;

    for (std::size_t cut = 1; cut < n; ++cut) {
      const std::vector<std::uint64_t> head(gens.begin(), gens.begin() + cut);
      const std::vector<std::uint64_t> tail(gens.begin() + cut, gens.end());
      const auto a = pol::finite_sums(tuple_of(head)).sums;
      const auto b = pol::finite_sums(tuple_of(tail)).sums;
      std::vector<std::uint64_t> combined;
      combined.insert(combined.end(), a.begin(), a.end());
      combined.insert(combined.end(), b.begin(), b.end());
      for (std::uint64_t x : a)
        for (std::uint64_t y : b) combined.push_back(x + y);
      std::sort(combined.begin(), combined.end());
      combined.erase(std::unique(combined.begin(), combined.end()), combined.end());
      REQUIRE(combined == whole);
    }
  }
}

TEST_CASE("partial sums") {
  CHECK(pol::partial_sums(tuple_of({2, 2, 2})) == std::vector<std::uint64_t>{2, 4, 6});
  CHECK(pol::partial_sums(tuple_of({5})) == std::vector<std::uint64_t>{5});
  CHECK(pol::partial_sums(tuple_of({1, 2, 4})) == std::vector<std::uint64_t>{1, 3, 7});

  pol::XorShift64 rng(13);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::uint64_t> gens(1 + rng.next() % 20);
    for (auto& g : gens) g = rng.uniform(1, 1000);
    const auto prefix = pol::partial_sums(tuple_of(gens));
    REQUIRE(std::is_sorted(prefix.begin(), prefix.end()));
    REQUIRE(std::adjacent_find(prefix.begin(), prefix.end()) == prefix.end());
  }
}

TEST_CASE("differences of prefix sums are finite sums") {
  pol::XorShift64 rng(14);
  for (int round = 0; round < 100; ++round) {
    std::vector<std::uint64_t> gens(1 + rng.next() % 10);
    for (auto& g : gens) g = rng.uniform(1, 50);
    const auto prefix = pol::partial_sums(tuple_of(gens));
    const auto fs = pol::finite_sums(tuple_of(gens));
    for (std::size_t i = 0; i < prefix.size(); ++i)
      for (std::size_t j = i + 1; j < prefix.size(); ++j)
        REQUIRE(fs.contains(prefix[j] - prefix[i]));
  }
}

TEST_CASE("difference set hand examples") {
  CHECK(pol::difference_set({1, 4, 6}) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(pol::difference_set({0, 2}) == std::vector<std::uint64_t>{2});
  CHECK(pol::difference_set({6, 4, 1, 4}) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK_THROWS_AS(pol::difference_set({3}), std::domain_error);
  CHECK_THROWS_AS(pol::difference_set({3, 3, 3}), std::domain_error);
}

TEST_CASE("difference set structure") {
  // arithmetic progression: exactly the multiples of the step
  std::vector<std::uint64_t> ap;
  for (std::uint64_t i = 0; i < 7; ++i) ap.push_back(10 + 3 * i);
  CHECK(pol::difference_set(ap) ==
        std::vector<std::uint64_t>{3, 6, 9, 12, 15, 18});

  // Sidon set: all pairwise differences distinct
  const std::vector<std::uint64_t> sidon = {1, 2, 5, 11};
  CHECK(pol::difference_set(sidon).size() == sidon.size() * (sidon.size() - 1) / 2);

  pol::XorShift64 rng(15);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::uint64_t> values(2 + rng.next() % 12);
    for (auto& v : values) v = rng.uniform(0, 500);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) continue;
    const auto diffs = pol::difference_set(values);
    REQUIRE(diffs.size() <= values.size() * (values.size() - 1) / 2);
  }
}

TEST_CASE("additive gap bound") {
  std::vector<std::uint64_t> evens;
  for (std::uint64_t m = 2; m <= 40; m += 2) evens.push_back(m);
  const auto report = pol::additive_gap_bound(evens, 10);
  CHECK(report.worst == 1);
  CHECK(report.failures.empty());
  CHECK(report.witnesses[0] == 1);  // n=1 -> 2
  CHECK(report.witnesses[1] == 0);  // n=2 in the set

  const auto single = pol::additive_gap_bound({10}, 10);
  CHECK(single.worst == 9);
  CHECK(single.witnesses[0] == 9);  // n=1 -> 10
  CHECK(single.failures.empty());

  // cutoff exceeded is a recorded failure, not an exception
  const auto cut = pol::additive_gap_bound({10}, 10, 5);
  CHECK(cut.failures == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(cut.worst == 5);

  // beyond the set's range there is nothing to find
  const auto beyond = pol::additive_gap_bound({3, 4}, 10);
  CHECK(beyond.failures == std::vector<std::uint64_t>{5, 6, 7, 8, 9, 10});

  CHECK_THROWS_AS(pol::additive_gap_bound({}, 5), std::domain_error);
  CHECK_THROWS_AS(pol::additive_gap_bound({3, 2}, 5), std::domain_error);
  CHECK_THROWS_AS(pol::additive_gap_bound({2, 2}, 5), std::domain_error);
}

TEST_CASE("multiplicative gap bound") {
  std::vector<std::uint64_t> sixes;
  for (std::uint64_t m = 6; m <= 60; m += 6) sixes.push_back(m);
  const auto report = pol::multiplicative_gap_bound(sixes, 10, 100);
  CHECK(report.failures.empty());
  CHECK(report.worst == 6);
  CHECK(report.witnesses[4] == 6);  // n=5 -> 30
  CHECK(report.witnesses[5] == 1);  // n=6 in the set
  CHECK(report.witnesses[9] == 3);  // n=10 -> 30

  const auto two = pol::multiplicative_gap_bound({2}, 2, 100);
  CHECK(two.witnesses[0] == 2);  // n=1 -> s=2
  CHECK(two.witnesses[1] == 1);  // n=2 -> s=1

  const auto starved = pol::multiplicative_gap_bound({3}, 2, 3);
  CHECK(starved.witnesses[0] == 3);  // n=1 -> s=3
  CHECK(starved.failures == std::vector<std::uint64_t>{2});  // recorded, not thrown

  const auto cut = pol::multiplicative_gap_bound({3}, 2, 1);
  CHECK(cut.failures == std::vector<std::uint64_t>{1, 2});  // witness 3 exceeds the cutoff

  CHECK_THROWS_AS(pol::multiplicative_gap_bound({2}, 2, 0), std::domain_error);
}

TEST_CASE("thickness window") {
  std::vector<std::uint64_t> naturals;
  for (std::uint64_t i = 0; i <= 30; ++i) naturals.push_back(i);
  CHECK(pol::thickness_window(naturals, {1, 2, 3}, 10) == 0);

  std::vector<std::uint64_t> evens;
  for (std::uint64_t m = 0; m <= 100; m += 2) evens.push_back(m);
  CHECK(pol::thickness_window(evens, {0, 1}, 100) == std::nullopt);  // parity obstruction

  CHECK(pol::thickness_window({5, 7}, {0, 2}, 100) == 5);
  CHECK_THROWS_AS(pol::thickness_window({5, 7}, {}, 10), std::domain_error);
}

TEST_CASE("thickness windows keep additive gaps below the shape diameter") {
  // a contains the translated shape; inside the window the next member is
  // never farther than the largest shape gap, hence bounded by max(shape)
  const std::vector<std::uint64_t> shape = {0, 5, 10};
  std::vector<std::uint64_t> a = {3, 17, 100, 105, 110, 400};
  std::sort(a.begin(), a.end());
  for (std::size_t prefix = 1; prefix <= shape.size(); ++prefix) {
    const std::vector<std::uint64_t> part(shape.begin(), shape.begin() + prefix);
    const auto x = pol::thickness_window(a, part, 1000);
    REQUIRE(x.has_value());
    const auto report = pol::additive_gap_bound(a, *x + part.back());
    for (std::uint64_t n = *x; n <= *x + part.back(); ++n) {
      REQUIRE(report.found[n - 1]);
      REQUIRE(report.witnesses[n - 1] <= shape.back());
    }
  }
}
