#include "pol/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pol {

namespace {

// First k primes.
std::vector<std::uint64_t> first_primes(std::uint64_t k) {
  std::uint64_t limit = 16;
  if (k >= 6) {
    const auto kd = static_cast<double>(k);
    limit = static_cast<std::uint64_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 16;
  }
  for (;;) {
    const SieveCache sieve = SieveCache::build(limit);
    if (sieve.count_primes(limit) >= k) {
      std::vector<std::uint64_t> primes;
      primes.reserve(k);
      sieve.for_each_prime(limit, [&](std::uint64_t p) {
        if (primes.size() < k) primes.push_back(p);
      });
      return primes;
    }
    limit += limit / 2 + 16;
  }
}

}  // namespace

BoundTable bound_table(std::uint64_t k) {
  if (k == 0) throw std::domain_error("k must be >= 1");
  const std::vector<std::uint64_t> primes = first_primes(k);

  BoundTable table;
  table.k = k;
  table.requirements.assign(k, BigInt(1));
  for (std::size_t i = k - 1; i-- > 0;)
    table.requirements[i] = BigInt(primes[i + 1]) * (table.requirements[i + 1] - 1) + 2;
  table.generators_needed = BigInt(primes[0]) * (table.requirements[0] - 1) + 1;
  return table;
}

BigInt required_generators(std::uint64_t k) { return bound_table(k).generators_needed; }

ExtractionResult extract_admissible(const GeneratorTuple& tuple, std::uint64_t k) {
  if (k == 0) throw std::domain_error("k must be >= 1");

  ExtractionTrace trace;
  trace.partial = partial_sums(tuple);
  const std::vector<std::uint64_t> primes = first_primes(k);

  std::vector<std::size_t> alive(trace.partial.size());
  std::iota(alive.begin(), alive.end(), 0);

  for (std::size_t step = 1; step <= k; ++step) {
    if (alive.empty()) throw InsufficientGeneratorsError(step);
    const std::uint64_t p = primes[step - 1];

    std::vector<std::size_t> class_size(p, 0);
    for (std::size_t idx : alive) ++class_size[trace.partial[idx] % p];

    // Largest class; ties resolve to the smallest residue.
    std::uint64_t h = 0;
    std::size_t best = 0;
    for (std::uint64_t r = 0; r < p; ++r) {
      if (class_size[r] > best) {
        best = class_size[r];
        h = r;
      }
    }

    std::vector<std::size_t> chosen_class;
    chosen_class.reserve(best);
    for (std::size_t idx : alive)
      if (trace.partial[idx] % p == h) chosen_class.push_back(idx);

    // alive is kept ascending, so the front is the least element.
    const std::size_t pick = chosen_class.front();
    trace.chosen.push_back(trace.partial[pick]);
    trace.steps.push_back(
        {step, p, h, chosen_class, pick, trace.partial[pick]});
    alive.assign(chosen_class.begin() + 1, chosen_class.end());
  }

  Tuple picks = Tuple::of(trace.chosen);
  return ExtractionResult{std::move(picks), std::move(trace)};
}

WitnessSearchResult pol_witness_search(const Tuple& tuple, std::uint64_t shift_limit,
                                       const SieveCache* sieve) {
  WitnessSearchResult result;
  result.tuple_admissible = admissible(is_admissible(tuple));
  if (shift_limit == 0) return result;

  const std::uint64_t need = shift_limit + tuple.values.back();
  std::optional<SieveCache> own;
  if (sieve == nullptr || sieve->limit() < need) {
    own = SieveCache::build(std::max<std::uint64_t>(need, 3));
    sieve = &*own;
  }

  std::vector<std::uint64_t> prime_members;
  prime_members.reserve(tuple.size());
  for (std::uint64_t n = 1; n <= shift_limit; ++n) {
    prime_members.clear();
    for (std::uint64_t h : tuple.values)
      if (sieve->is_prime(n + h)) prime_members.push_back(n + h);

    for (std::size_t i = 0; i + 1 < prime_members.size(); ++i) {
      const std::uint64_t x = prime_members[i];
      const std::uint64_t y = prime_members[i + 1];
      // Consecutive iff no prime strictly between; only odd candidates can be.
      bool consecutive = true;
      for (std::uint64_t q = (x == 2 ? 3 : x + 2); q < y; q += 2) {
        if (sieve->is_prime(q)) {
          consecutive = false;
          break;
        }
      }
      if (consecutive) {
        result.hit = WitnessHit{n, x, y, y - x};
        return result;
      }
    }
  }
  return result;
}

}  // namespace pol
