#include "pol/gapstats.hpp"

#include <algorithm>
#include <stdexcept>

#include "pol/parallel.hpp"

namespace pol {

std::uint64_t GapHistogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [gap, count] : counts) sum += count;
  return sum;
}

std::string set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::polignac: return "polignac";
    case SetKind::kronecker: return "kronecker";
    case SetKind::maillet: return "maillet";
  }
  return "unknown";
}

bool EmpiricalNumberSet::contains(std::uint64_t m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

std::uint64_t EmpiricalNumberSet::max_member() const {
  return members.empty() ? 0 : members.back();
}

GapHistogram gap_histogram(const SieveCache& sieve, std::uint64_t up_to) {
  if (up_to == 0) up_to = sieve.limit();
  if (up_to < 3) throw std::domain_error("gap histogram needs limit >= 3");

  // Gaps are tiny relative to the limit; tally into a flat array first.
  std::vector<std::uint64_t> tally;
  for_each_gap(sieve, up_to, [&](const GapRecord& g) {
    if (g.gap >= tally.size()) tally.resize(g.gap + 1, 0);
    ++tally[g.gap];
  });

  GapHistogram hist;
  hist.limit = up_to;
  for (std::uint64_t gap = 0; gap < tally.size(); ++gap)
    if (tally[gap] != 0) hist.counts.emplace(gap, tally[gap]);
  return hist;
}

GapHistogram gap_histogram(std::uint64_t limit) {
  if (limit < 3) throw std::domain_error("gap histogram needs limit >= 3");
  return gap_histogram(SieveCache::build(limit), limit);
}

EmpiricalNumberSet empirical_polignac(const GapHistogram& hist, std::uint64_t threshold) {
  if (threshold == 0) throw std::domain_error("threshold must be >= 1");
  EmpiricalNumberSet set;
  set.kind = SetKind::polignac;
  set.limit = hist.limit;
  set.threshold = threshold;
  set.counts = hist.counts;
  for (const auto& [gap, count] : hist.counts)
    if (count >= threshold) set.members.push_back(gap);
  return set;
}

EmpiricalNumberSet empirical_polignac(const SieveCache& sieve, std::uint64_t up_to,
                                      std::uint64_t threshold) {
  return empirical_polignac(gap_histogram(sieve, up_to), threshold);
}

EmpiricalNumberSet empirical_polignac(std::uint64_t limit, std::uint64_t threshold) {
  return empirical_polignac(gap_histogram(limit), threshold);
}

namespace {

EmpiricalNumberSet pair_difference_set(const SieveCache& sieve, std::uint64_t up_to,
                                       std::uint64_t max_value, std::uint64_t threshold,
                                       SetKind kind, unsigned threads) {
  if (up_to < 3) throw std::domain_error("pair scan needs limit >= 3");
  if (up_to > sieve.limit()) throw std::out_of_range("pair scan beyond sieve limit");
  if (max_value < 2) throw std::domain_error("max_value must be >= 2");
  if (threshold == 0) throw std::domain_error("threshold must be >= 1");

  // 2 + even m is even, so only odd primes can start a pair.
  std::vector<std::uint64_t> odd_primes;
  sieve.for_each_prime(up_to, [&](std::uint64_t p) {
    if (p != 2) odd_primes.push_back(p);
  });

  const std::size_t candidates = max_value / 2;
  std::vector<std::uint64_t> pair_counts(candidates, 0);
  parallel_for(candidates, threads, [&](std::size_t ci) {
    const std::uint64_t m = 2 * (ci + 1);
    std::uint64_t count = 0;
    for (std::uint64_t q : odd_primes) {
      if (q + m > up_to) break;
      if (sieve.is_prime(q + m)) ++count;
    }
    pair_counts[ci] = count;
  });

  EmpiricalNumberSet set;
  set.kind = kind;
  set.limit = up_to;
  set.threshold = threshold;
  set.max_value = max_value;
  for (std::size_t ci = 0; ci < candidates; ++ci) {
    const std::uint64_t m = 2 * (ci + 1);
    set.counts.emplace(m, pair_counts[ci]);
    if (pair_counts[ci] >= threshold) set.members.push_back(m);
  }
  return set;
}

}  // namespace

EmpiricalNumberSet empirical_kronecker(const SieveCache& sieve, std::uint64_t up_to,
                                       std::uint64_t max_value, std::uint64_t threshold,
                                       unsigned threads) {
  return pair_difference_set(sieve, up_to, max_value, threshold, SetKind::kronecker, threads);
}

EmpiricalNumberSet empirical_kronecker(std::uint64_t limit, std::uint64_t max_value,
                                       std::uint64_t threshold, unsigned threads) {
  if (limit < 3) throw std::domain_error("pair scan needs limit >= 3");
  return empirical_kronecker(SieveCache::build(limit, threads), limit, max_value, threshold,
                             threads);
}

EmpiricalNumberSet empirical_maillet(const SieveCache& sieve, std::uint64_t up_to,
                                     std::uint64_t max_value, unsigned threads) {
  return pair_difference_set(sieve, up_to, max_value, 1, SetKind::maillet, threads);
}

EmpiricalNumberSet empirical_maillet(std::uint64_t limit, std::uint64_t max_value,
                                     unsigned threads) {
  if (limit < 3) throw std::domain_error("pair scan needs limit >= 3");
  return empirical_maillet(SieveCache::build(limit, threads), limit, max_value, threads);
}

}  // namespace pol
