// sieve.hpp — segmented odd-only sieve of Eratosthenes with consecutive-gap
// streaming and a versioned binary cache.
//
// Composite flags cover odd numbers only; 2 is handled out of band.
//   bit index i  <->  odd number 2*i + 3
// A clear bit means prime, so the zeroed bitset starts "all prime" and the
// sieve only ever sets bits. Building marks fixed-size segments (default
// 2^20 odd flags) against the base primes <= sqrt(limit), keeping the
// working set O(sqrt(limit) + segment) for any limit.
//
// Cache file layout (bit-exact, versioned by the magic string):
//   bytes 0..8    magic "POLSIEVE1"
//   bytes 9..16   limit, unsigned 64-bit little-endian
//   bytes 17..    composite flags, LSB-first within each byte,
//                 zero-padded to a whole byte

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pol {

inline constexpr char kSieveMagic[9] = {'P', 'O', 'L', 'S', 'I', 'E', 'V', 'E', '1'};
inline constexpr std::uint64_t kDefaultSegmentOdds = 1ull << 20;

std::uint64_t isqrt(std::uint64_t n);

class SieveCache {
 public:
  // Sieve all odd numbers in [3, limit]. Segments are disjoint word ranges
  // of the bitset, so they may be marked concurrently; the result never
  // depends on the thread count. limit < 2 is a domain error.
  static SieveCache build(std::uint64_t limit, unsigned threads = 1,
                          std::uint64_t segment_odds = kDefaultSegmentOdds);

  static SieveCache load(const std::string& path);
  void save(const std::string& path) const;

  std::uint64_t limit() const { return limit_; }

  // Requires n <= limit().
  bool is_prime(std::uint64_t n) const {
    if (n > limit_) throw std::out_of_range("primality query beyond sieve limit");
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    const std::uint64_t bit = (n - 3) / 2;
    return ((words_[bit / 64] >> (bit % 64)) & 1ull) == 0;
  }

  // pi(up_to); requires up_to <= limit().
  std::uint64_t count_primes(std::uint64_t up_to) const;

  // Calls fn(p) for every prime p <= up_to, ascending.
  template <typename Fn>
  void for_each_prime(std::uint64_t up_to, Fn&& fn) const {
    if (up_to > limit_) throw std::out_of_range("prime walk beyond sieve limit");
    if (up_to >= 2) fn(std::uint64_t{2});
    const std::uint64_t bits = odd_count(up_to);
    const std::uint64_t nwords = (bits + 63) / 64;
    for (std::uint64_t w = 0; w < nwords; ++w) {
      std::uint64_t primes = ~words_[w];
      if (w == nwords - 1 && bits % 64 != 0) primes &= (1ull << (bits % 64)) - 1;
      while (primes != 0) {
        const auto b = static_cast<std::uint64_t>(std::countr_zero(primes));
        fn(3 + 2 * (64 * w + b));
        primes &= primes - 1;
      }
    }
  }

  bool operator==(const SieveCache&) const = default;

 private:
  SieveCache() = default;

  static std::uint64_t odd_count(std::uint64_t limit) {
    return limit < 3 ? 0 : (limit - 3) / 2 + 1;
  }

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> words_;  // set bit = odd composite
};

// One consecutive-prime pair (p_n, p_{n+1}) and its gap.
struct GapRecord {
  std::uint64_t index;  // n, 1-based
  std::uint64_t lower;  // p_n
  std::uint64_t upper;  // p_{n+1}
  std::uint64_t gap;    // upper - lower
  bool operator==(const GapRecord&) const = default;
};

// Calls fn for every consecutive pair with upper <= up_to, in order.
// The (2,3) gap of size 1 is emitted like any other; consumers filter.
template <typename Fn>
void for_each_gap(const SieveCache& sieve, std::uint64_t up_to, Fn&& fn) {
  if (up_to < 3) throw std::domain_error("gap stream needs limit >= 3");
  std::uint64_t prev = 0;
  std::uint64_t index = 0;
  sieve.for_each_prime(up_to, [&](std::uint64_t p) {
    if (prev != 0) {
      ++index;
      fn(GapRecord{index, prev, p, p - prev});
    }
    prev = p;
  });
}

std::vector<std::uint64_t> primes_up_to(const SieveCache& sieve, std::uint64_t up_to);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, unsigned threads = 1);
std::uint64_t nth_prime(std::uint64_t n);
std::vector<GapRecord> gap_stream(const SieveCache& sieve, std::uint64_t up_to);
std::vector<GapRecord> gap_stream(std::uint64_t limit, unsigned threads = 1);

}  // namespace pol
