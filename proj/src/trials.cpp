#include "pol/trials.hpp"

#include <set>
#include <stdexcept>

#include "pol/errors.hpp"
#include "pol/parallel.hpp"
#include "pol/rng.hpp"
#include "pol/setcalc.hpp"

namespace pol {

std::vector<std::uint64_t> ip_trial_generators(std::uint64_t n, std::uint64_t gen_bound,
                                               std::uint64_t seed, std::uint64_t trial,
                                               bool even) {
  XorShift64 rng(trial_seed(seed, trial));
  std::vector<std::uint64_t> generators(n);
  for (auto& x : generators)
    x = even ? 2 * rng.uniform(1, gen_bound / 2) : rng.uniform(1, gen_bound);
  return generators;
}

std::vector<std::uint64_t> delta_trial_elements(std::uint64_t r, std::uint64_t elem_bound,
                                                std::uint64_t seed, std::uint64_t trial) {
  XorShift64 rng(trial_seed(seed, trial));
  std::set<std::uint64_t> elements;
  while (elements.size() < r) elements.insert(rng.uniform(1, elem_bound));
  return {elements.begin(), elements.end()};
}

namespace {

TrialReport run_ip(const EmpiricalNumberSet& target, std::uint64_t n, std::uint64_t gen_bound,
                   std::uint64_t trials, std::uint64_t seed, unsigned threads, bool even) {
  if (n == 0) throw std::domain_error("generator count must be >= 1");
  if (n > kMaxFiniteSumGenerators)
    throw CapacityError("IP trial size capped at 25 generators");
  if (gen_bound < (even ? 2u : 1u))
    throw std::domain_error("generator bound too small");

  std::vector<char> success(trials, 0);
  std::vector<std::vector<std::uint64_t>> missed(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    std::vector<std::uint64_t> generators = ip_trial_generators(n, gen_bound, seed, i, even);
    const FiniteSumSet fs = finite_sums(GeneratorTuple::of(generators));
    bool hit = false;
    for (std::uint64_t s : fs.sums) {
      if (target.contains(s)) {
        hit = true;
        break;
      }
    }
    success[i] = hit;
    if (!hit) missed[i] = std::move(generators);
  });

  TrialReport report;
  report.kind = even ? "even-ip" : "ip";
  report.size = n;
  report.value_bound = gen_bound;
  report.trials = trials;
  report.seed = seed;
  report.set_kind = target.kind;
  report.set_limit = target.limit;
  report.set_threshold = target.threshold;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (success[i])
      ++report.successes;
    else
      report.failures.push_back({i, std::move(missed[i])});
  }
  return report;
}

}  // namespace

TrialReport ip_trial(const EmpiricalNumberSet& target, std::uint64_t n,
                     std::uint64_t gen_bound, std::uint64_t trials, std::uint64_t seed,
                     unsigned threads) {
  return run_ip(target, n, gen_bound, trials, seed, threads, false);
}

TrialReport even_ip_trial(const EmpiricalNumberSet& target, std::uint64_t n,
                          std::uint64_t gen_bound, std::uint64_t trials, std::uint64_t seed,
                          unsigned threads) {
  return run_ip(target, n, gen_bound, trials, seed, threads, true);
}

TrialReport delta_trial(const EmpiricalNumberSet& target, std::uint64_t r,
                        std::uint64_t elem_bound, std::uint64_t trials, std::uint64_t seed,
                        unsigned threads) {
  if (r < 2) throw std::domain_error("delta trial needs r >= 2");
  if (elem_bound < r) throw std::domain_error("element bound must be >= r");

  std::vector<char> success(trials, 0);
  std::vector<std::vector<std::uint64_t>> missed(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    std::vector<std::uint64_t> elements = delta_trial_elements(r, elem_bound, seed, i);
    bool hit = false;
    for (std::size_t a = 0; a < elements.size() && !hit; ++a)
      for (std::size_t b = a + 1; b < elements.size(); ++b)
        if (target.contains(elements[b] - elements[a])) {
          hit = true;
          break;
        }
    success[i] = hit;
    if (!hit) missed[i] = std::move(elements);
  });

  TrialReport report;
  report.kind = "delta";
  report.size = r;
  report.value_bound = elem_bound;
  report.trials = trials;
  report.seed = seed;
  report.set_kind = target.kind;
  report.set_limit = target.limit;
  report.set_threshold = target.threshold;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (success[i])
      ++report.successes;
    else
      report.failures.push_back({i, std::move(missed[i])});
  }
  return report;
}

ProductCoverReport product_cover_check(const EmpiricalNumberSet& set, std::uint64_t k,
                                       std::uint64_t m_limit) {
  if (k == 0) throw std::domain_error("k must be >= 1");
  if (m_limit == 0) throw std::domain_error("m_limit must be >= 1");

  const std::uint64_t bound = k * m_limit;
  std::vector<char> covered(bound + 1, 0);
  for (std::uint64_t a : set.members) {
    if (a == 0 || a > bound) break;
    for (std::uint64_t b : set.members) {
      if (b > bound / a) break;
      covered[a * b] = 1;
    }
  }

  ProductCoverReport report;
  report.k = k;
  report.m_limit = m_limit;
  report.set_kind = set.kind;
  report.set_limit = set.limit;
  report.set_threshold = set.threshold;
  for (std::uint64_t m = 1; m <= m_limit; ++m) {
    if (covered[k * m])
      ++report.covered_count;
    else
      report.uncovered.push_back(k * m);
  }
  return report;
}

EchoReport best_known_echo(const EmpiricalNumberSet& set) {
  EchoReport report;
  report.set_kind = set.kind;
  report.set_limit = set.limit;
  report.set_threshold = set.threshold;
  if (set.members.empty()) return report;
  report.smallest = set.members.front();
  const auto it = set.counts.find(*report.smallest);
  report.count = it != set.counts.end() ? it->second : 0;
  return report;
}

}  // namespace pol
