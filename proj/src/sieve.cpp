#include "pol/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "pol/parallel.hpp"

namespace pol {

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

SieveCache SieveCache::build(std::uint64_t limit, unsigned threads, std::uint64_t segment_odds) {
  if (limit < 2) throw std::domain_error("sieve limit must be >= 2");
  if (segment_odds < 64) segment_odds = 64;
  segment_odds = (segment_odds + 63) / 64 * 64;  // keep segments word-aligned

  SieveCache cache;
  cache.limit_ = limit;
  const std::uint64_t bits = odd_count(limit);
  cache.words_.assign((bits + 63) / 64, 0);
  if (bits == 0) return cache;

  // Odd base primes up to sqrt(limit) by a plain byte sieve.
  const std::uint64_t root = isqrt(limit);
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
  }

  const std::uint64_t segments = (bits + segment_odds - 1) / segment_odds;
  parallel_for(segments, threads, [&](std::size_t seg) {
    const std::uint64_t bit_lo = seg * segment_odds;
    const std::uint64_t bit_hi = std::min(bit_lo + segment_odds, bits);  // exclusive
    const std::uint64_t low = 3 + 2 * bit_lo;
    const std::uint64_t high = 3 + 2 * (bit_hi - 1);
    for (std::uint64_t p : base) {
      std::uint64_t start = p * p;
      if (start > high) break;
      if (start < low) {
        std::uint64_t q = (low + p - 1) / p * p;
        if (q % 2 == 0) q += p;  // stay on odd multiples
        start = q;
      }
      for (std::uint64_t j = start; j <= high; j += 2 * p) {
        const std::uint64_t bit = (j - 3) / 2;
        cache.words_[bit / 64] |= 1ull << (bit % 64);
      }
    }
  });
  return cache;
}

std::uint64_t SieveCache::count_primes(std::uint64_t up_to) const {
  if (up_to > limit_) throw std::out_of_range("prime count beyond sieve limit");
  if (up_to < 2) return 0;
  std::uint64_t count = 1;  // the prime 2
  const std::uint64_t bits = odd_count(up_to);
  const std::uint64_t nwords = (bits + 63) / 64;
  for (std::uint64_t w = 0; w < nwords; ++w) {
    std::uint64_t primes = ~words_[w];
    if (w == nwords - 1 && bits % 64 != 0) primes &= (1ull << (bits % 64)) - 1;
    count += static_cast<std::uint64_t>(std::popcount(primes));
  }
  return count;
}

void SieveCache::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open sieve cache for writing: " + path);
  out.write(kSieveMagic, sizeof(kSieveMagic));
  unsigned char header[8];
  for (int i = 0; i < 8; ++i) header[i] = static_cast<unsigned char>(limit_ >> (8 * i));
  out.write(reinterpret_cast<const char*>(header), sizeof(header));

  const std::uint64_t bits = odd_count(limit_);
  const std::uint64_t nbytes = (bits + 7) / 8;
  std::vector<unsigned char> bytes(nbytes);
  for (std::uint64_t b = 0; b < nbytes; ++b)
    bytes[b] = static_cast<unsigned char>(words_[b / 8] >> (8 * (b % 8)));
  if (bits % 8 != 0) bytes[nbytes - 1] &= static_cast<unsigned char>((1u << (bits % 8)) - 1);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(nbytes));
  if (!out) throw std::runtime_error("short write to sieve cache: " + path);
}

SieveCache SieveCache::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sieve cache: " + path);
  char magic[sizeof(kSieveMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kSieveMagic, sizeof(magic)) != 0)
    throw std::runtime_error("not a sieve cache (bad magic): " + path);

  unsigned char header[8];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (!in) throw std::runtime_error("truncated sieve cache header: " + path);
  std::uint64_t limit = 0;
  for (int i = 0; i < 8; ++i) limit |= static_cast<std::uint64_t>(header[i]) << (8 * i);
  if (limit < 2) throw std::runtime_error("sieve cache limit out of range: " + path);

  const std::uint64_t bits = odd_count(limit);
  const std::uint64_t nbytes = (bits + 7) / 8;
  std::vector<unsigned char> bytes(nbytes);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(nbytes));
  if (static_cast<std::uint64_t>(in.gcount()) != nbytes)
    throw std::runtime_error("truncated sieve cache body: " + path);
  in.peek();
  if (!in.eof()) throw std::runtime_error("trailing bytes in sieve cache: " + path);

  SieveCache cache;
  cache.limit_ = limit;
  cache.words_.assign((bits + 63) / 64, 0);
  for (std::uint64_t b = 0; b < nbytes; ++b)
    cache.words_[b / 8] |= static_cast<std::uint64_t>(bytes[b]) << (8 * (b % 8));
  if (bits % 64 != 0) cache.words_.back() &= (1ull << (bits % 64)) - 1;
  return cache;
}

std::vector<std::uint64_t> primes_up_to(const SieveCache& sieve, std::uint64_t up_to) {
  if (up_to < 2) throw std::domain_error("prime limit must be >= 2");
  std::vector<std::uint64_t> out;
  if (up_to >= 17) {
    const double x = static_cast<double>(up_to);
    out.reserve(static_cast<std::size_t>(x / (std::log(x) - 1.1)) + 8);
  }
  sieve.for_each_prime(up_to, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, unsigned threads) {
  return primes_up_to(SieveCache::build(limit, threads), limit);
}

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) throw std::domain_error("prime index starts at 1");
  static constexpr std::uint64_t kFirst[] = {2, 3, 5, 7, 11};
  if (n <= 5) return kFirst[n - 1];
  const auto nd = static_cast<double>(n);
  auto limit = static_cast<std::uint64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
  for (;;) {
    const SieveCache sieve = SieveCache::build(limit);
    if (sieve.count_primes(limit) >= n) {
      std::uint64_t seen = 0;
      std::uint64_t hit = 0;
      sieve.for_each_prime(limit, [&](std::uint64_t p) {
        if (++seen == n) hit = p;
      });
      return hit;
    }
    limit += limit / 2 + 16;  // unreachable for n >= 6 by the p_n upper bound
  }
}

std::vector<GapRecord> gap_stream(const SieveCache& sieve, std::uint64_t up_to) {
  std::vector<GapRecord> out;
  if (up_to >= 17) out.reserve(sieve.count_primes(up_to));
  for_each_gap(sieve, up_to, [&](const GapRecord& g) { out.push_back(g); });
  return out;
}

std::vector<GapRecord> gap_stream(std::uint64_t limit, unsigned threads) {
  if (limit < 3) throw std::domain_error("gap stream needs limit >= 3");
  return gap_stream(SieveCache::build(limit, threads), limit);
}

}  // namespace pol
