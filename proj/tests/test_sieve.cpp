#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pol/sieve.hpp"

namespace {

std::filesystem::path temp_file(const char* tag) {
  return std::filesystem::temp_directory_path() /
         (std::string("poltool-test-") + tag + "-" + std::to_string(::getpid()) + ".bin");
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("primes_up_to matches hand values") {
  CHECK(pol::primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(pol::primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(pol::primes_up_to(3) == std::vector<std::uint64_t>{2, 3});
  CHECK_THROWS_AS(pol::primes_up_to(1), std::domain_error);
}

TEST_CASE("primes_up_to agrees with the trial-division oracle") {
  const std::vector<std::uint64_t> expected = oracle::trial_division_primes(100000);
  CHECK(expected.size() == 9592);  // pi(10^5)
  CHECK(pol::primes_up_to(100000) == expected);

  // every truncation is the oracle prefix; exhaustive small sweep here,
  // the full sweep to 10^5 runs in the acceptance suite
  for (std::uint64_t limit = 2; limit <= 3000; ++limit) {
    const auto got = pol::primes_up_to(limit);
    const auto end = std::upper_bound(expected.begin(), expected.end(), limit);
    const std::vector<std::uint64_t> want(expected.begin(), end);
    REQUIRE(got == want);
  }
}

TEST_CASE("nth_prime") {
  CHECK(pol::nth_prime(1) == 2);
  CHECK(pol::nth_prime(4) == 7);
  CHECK(pol::nth_prime(5) == 11);
  CHECK(pol::nth_prime(6) == 13);
  CHECK_THROWS_AS(pol::nth_prime(0), std::domain_error);

  const std::vector<std::uint64_t> primes = oracle::trial_division_primes(110000);
  REQUIRE(primes.size() >= 10000);
  CHECK(pol::nth_prime(10000) == primes[9999]);
  CHECK(pol::nth_prime(1000) == primes[999]);
}

TEST_CASE("gap_stream hand examples") {
  const auto gaps = pol::gap_stream(12);
  REQUIRE(gaps.size() == 4);
  CHECK(gaps[0] == pol::GapRecord{1, 2, 3, 1});
  CHECK(gaps[1] == pol::GapRecord{2, 3, 5, 2});
  CHECK(gaps[2] == pol::GapRecord{3, 5, 7, 2});
  CHECK(gaps[3] == pol::GapRecord{4, 7, 11, 4});

  const auto to30 = pol::gap_stream(30);
  REQUIRE(!to30.empty());
  CHECK(to30.back() == pol::GapRecord{to30.size(), 23, 29, 6});

  CHECK_THROWS_AS(pol::gap_stream(2), std::domain_error);
}

TEST_CASE("gap_stream partitions consecutive pairs") {
  const auto gaps = pol::gap_stream(100000);
  const pol::SieveCache sieve = pol::SieveCache::build(100000);
  CHECK(gaps.size() == sieve.count_primes(100000) - 1);

  std::uint64_t gap_sum = 0;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    CHECK(gaps[i].index == i + 1);
    CHECK(gaps[i].gap == gaps[i].upper - gaps[i].lower);
    if (i > 0) {
      REQUIRE(gaps[i].lower == gaps[i - 1].upper);
      REQUIRE(gaps[i].upper > gaps[i - 1].upper);
    }
    gap_sum += gaps[i].gap;
  }
  // telescoping: sum of gaps = (largest prime <= X) - 2
  CHECK(gap_sum == gaps.back().upper - 2);
}

TEST_CASE("gap_stream count at 10^6 cross-checked") {
  const std::vector<std::uint64_t> primes = oracle::trial_division_primes(1000000);
  const auto gaps = pol::gap_stream(1000000);
  CHECK(gaps.size() == primes.size() - 1);
  CHECK(gaps.back().upper == primes.back());
}

TEST_CASE("gap records are exactly the oracle's consecutive pairs") {
  const std::vector<std::uint64_t> primes = oracle::trial_division_primes(10000);
  const auto gaps = pol::gap_stream(10000);
  REQUIRE(gaps.size() == primes.size() - 1);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    REQUIRE(gaps[i].lower == primes[i]);
    REQUIRE(gaps[i].upper == primes[i + 1]);
  }
}

TEST_CASE("gap parity: 1 only for (2,3), even otherwise") {
  for (const auto& g : pol::gap_stream(100000)) {
    if (g.lower == 2) {
      REQUIRE(g.gap == 1);
    } else {
      REQUIRE(g.gap % 2 == 0);
    }
    REQUIRE(g.gap >= 1);
  }
}

TEST_CASE("sieve is independent of segment size and thread count") {
  const pol::SieveCache reference = pol::SieveCache::build(100000);
  CHECK(pol::SieveCache::build(100000, 1, 64) == reference);
  CHECK(pol::SieveCache::build(100000, 1, 1 << 12) == reference);
  CHECK(pol::SieveCache::build(100000, 4) == reference);
  CHECK(pol::SieveCache::build(100000, 8, 1 << 10) == reference);
}

TEST_CASE("is_prime queries") {
  const pol::SieveCache sieve = pol::SieveCache::build(1000);
  CHECK(sieve.is_prime(2));
  CHECK(sieve.is_prime(3));
  CHECK(sieve.is_prime(997));
  CHECK_FALSE(sieve.is_prime(1));
  CHECK_FALSE(sieve.is_prime(0));
  CHECK_FALSE(sieve.is_prime(9));
  CHECK_FALSE(sieve.is_prime(1000));
  CHECK_THROWS_AS(sieve.is_prime(1001), std::out_of_range);
  CHECK_THROWS_AS(pol::SieveCache::build(1), std::domain_error);
}

TEST_CASE("cache files round-trip byte-identically") {
  const auto path_a = temp_file("cache-a");
  const auto path_b = temp_file("cache-b");

  const pol::SieveCache built = pol::SieveCache::build(54321);
  built.save(path_a.string());
  const pol::SieveCache loaded = pol::SieveCache::load(path_a.string());
  CHECK(loaded == built);
  loaded.save(path_b.string());

  const std::string bytes_a = slurp(path_a);
  const std::string bytes_b = slurp(path_b);
  CHECK(bytes_a == bytes_b);
  CHECK(bytes_a.size() == 9 + 8 + ((54321 - 3) / 2 + 1 + 7) / 8);
  CHECK(bytes_a.substr(0, 9) == "POLSIEVE1");

  std::filesystem::remove(path_a);
  std::filesystem::remove(path_b);
}

TEST_CASE("cache load rejects corrupt files") {
  const auto path = temp_file("cache-corrupt");

  SUBCASE("bad magic") {
    std::ofstream(path, std::ios::binary) << "NOTACACHE" << std::string(20, '\0');
    CHECK_THROWS_AS(pol::SieveCache::load(path.string()), std::runtime_error);
  }
  SUBCASE("truncated body") {
    pol::SieveCache::build(10000).save(path.string());
    std::filesystem::resize_file(path, std::filesystem::file_size(path) - 5);
    CHECK_THROWS_AS(pol::SieveCache::load(path.string()), std::runtime_error);
  }
  SUBCASE("trailing bytes") {
    pol::SieveCache::build(10000).save(path.string());
    std::ofstream(path, std::ios::binary | std::ios::app) << "xx";
    CHECK_THROWS_AS(pol::SieveCache::load(path.string()), std::runtime_error);
  }
  SUBCASE("missing file") {
    std::filesystem::remove(path);
    CHECK_THROWS_AS(pol::SieveCache::load(path.string()), std::runtime_error);
  }

  std::filesystem::remove(path);
}
