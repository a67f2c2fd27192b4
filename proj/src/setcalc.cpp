#include "pol/setcalc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pol {

namespace {

std::uint64_t checked_total(const std::vector<std::uint64_t>& values) {
  std::uint64_t total = 0;
  for (std::uint64_t v : values) {
    if (total > std::numeric_limits<std::uint64_t>::max() - v)
      throw std::domain_error("generator sum overflows 64 bits");
    total += v;
  }
  return total;
}

void require_sorted_set(const std::vector<std::uint64_t>& a) {
  if (a.empty()) throw std::domain_error("set must be nonempty");
  if (!std::is_sorted(a.begin(), a.end()) ||
      std::adjacent_find(a.begin(), a.end()) != a.end())
    throw std::domain_error("set must be sorted ascending with distinct members");
}

bool in_set(const std::vector<std::uint64_t>& a, std::uint64_t v) {
  return std::binary_search(a.begin(), a.end(), v);
}

}  // namespace

GeneratorTuple GeneratorTuple::of(std::vector<std::uint64_t> values) {
  if (values.empty()) throw std::domain_error("generator tuple must be nonempty");
  for (std::uint64_t v : values)
    if (v == 0) throw std::domain_error("generators must be >= 1");
  GeneratorTuple t;
  t.generators = std::move(values);
  return t;
}

bool FiniteSumSet::contains(std::uint64_t value) const {
  return std::binary_search(sums.begin(), sums.end(), value);
}

FiniteSumSet finite_sums(const GeneratorTuple& tuple) {
  if (tuple.size() > kMaxFiniteSumGenerators)
    throw CapacityError("finite-sums enumeration capped at 25 generators");
  checked_total(tuple.generators);

  // Fold generators in one at a time, deduplicating as repeats collapse.
  std::vector<std::uint64_t> sums;
  for (std::uint64_t x : tuple.generators) {
    const std::size_t old_size = sums.size();
    sums.reserve(2 * old_size + 1);
    for (std::size_t i = 0; i < old_size; ++i) sums.push_back(sums[i] + x);
    sums.push_back(x);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  }
  return FiniteSumSet{tuple, std::move(sums)};
}

std::vector<std::uint64_t> partial_sums(const GeneratorTuple& tuple) {
  checked_total(tuple.generators);
  std::vector<std::uint64_t> out;
  out.reserve(tuple.size());
  std::uint64_t running = 0;
  for (std::uint64_t x : tuple.generators) out.push_back(running += x);
  return out;
}

std::vector<std::uint64_t> difference_set(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < 2)
    throw std::domain_error("difference set needs at least two distinct values");

  std::vector<std::uint64_t> diffs;
  diffs.reserve(values.size() * (values.size() - 1) / 2);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      diffs.push_back(values[j] - values[i]);
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  return diffs;
}

namespace {

void revalidate(const SyndeticityReport& report, const std::vector<std::uint64_t>& a) {
  for (std::uint64_t n = 1; n <= report.bound; ++n) {
    if (!report.found[n - 1]) continue;
    const std::uint64_t w = report.witnesses[n - 1];
    const bool ok = report.mode == SyndeticityReport::Mode::additive
                        ? in_set(a, n + w)
                        : in_set(a, n * w);
    if (!ok) throw std::logic_error("syndeticity witness failed re-validation");
  }
}

}  // namespace

SyndeticityReport additive_gap_bound(const std::vector<std::uint64_t>& sorted_set,
                                     std::uint64_t bound, std::uint64_t cutoff) {
  require_sorted_set(sorted_set);
  if (bound == 0) throw std::domain_error("bound must be >= 1");

  SyndeticityReport report;
  report.mode = SyndeticityReport::Mode::additive;
  report.bound = bound;
  report.cutoff = cutoff;
  report.witnesses.assign(bound, 0);
  report.found.assign(bound, 0);

  for (std::uint64_t n = 1; n <= bound; ++n) {
    const auto it = std::lower_bound(sorted_set.begin(), sorted_set.end(), n);
    if (it != sorted_set.end() && *it - n <= cutoff) {
      const std::uint64_t shift = *it - n;
      report.witnesses[n - 1] = shift;
      report.found[n - 1] = 1;
      report.worst = std::max(report.worst, shift);
      ++report.witness_histogram[shift];
    } else {
      report.failures.push_back(n);
    }
  }
  revalidate(report, sorted_set);
  return report;
}

SyndeticityReport multiplicative_gap_bound(const std::vector<std::uint64_t>& sorted_set,
                                           std::uint64_t bound, std::uint64_t factor_cutoff) {
  require_sorted_set(sorted_set);
  if (bound == 0) throw std::domain_error("bound must be >= 1");
  if (factor_cutoff == 0) throw std::domain_error("factor cutoff must be >= 1");

  SyndeticityReport report;
  report.mode = SyndeticityReport::Mode::multiplicative;
  report.bound = bound;
  report.cutoff = factor_cutoff;
  report.witnesses.assign(bound, 0);
  report.found.assign(bound, 0);

  const std::uint64_t top = sorted_set.back();
  for (std::uint64_t n = 1; n <= bound; ++n) {
    std::uint64_t witness = 0;
    std::uint64_t multiple = 0;
    for (std::uint64_t s = 1; s <= factor_cutoff; ++s) {
      multiple += n;
      if (multiple > top) break;  // larger s only overshoots further
      if (in_set(sorted_set, multiple)) {
        witness = s;
        break;
      }
    }
    if (witness != 0) {
      report.witnesses[n - 1] = witness;
      report.found[n - 1] = 1;
      report.worst = std::max(report.worst, witness);
      ++report.witness_histogram[witness];
    } else {
      report.failures.push_back(n);
    }
  }
  revalidate(report, sorted_set);
  return report;
}

std::optional<std::uint64_t> thickness_window(const std::vector<std::uint64_t>& sorted_set,
                                              const std::vector<std::uint64_t>& shape,
                                              std::uint64_t search_bound) {
  require_sorted_set(sorted_set);
  if (shape.empty()) throw std::domain_error("shape must be nonempty");

  for (std::uint64_t x = 0; x <= search_bound; ++x) {
    bool all = true;
    for (std::uint64_t f : shape) {
      if (!in_set(sorted_set, f + x)) {
        all = false;
        break;
      }
    }
    if (all) return x;
  }
  return std::nullopt;
}

}  // namespace pol
