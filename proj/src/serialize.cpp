#include "pol/serialize.hpp"

#include <sstream>

namespace pol {

namespace {

nlohmann::json counts_object(const std::map<std::uint64_t, std::uint64_t>& counts) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [key, value] : counts) obj[std::to_string(key)] = value;
  return obj;
}

nlohmann::json set_params(SetKind kind, std::uint64_t limit, std::uint64_t threshold) {
  return {{"kind", set_kind_name(kind)}, {"limit", limit}, {"threshold", threshold}};
}

}  // namespace

nlohmann::json to_json(const GapHistogram& hist) {
  return {{"kind", "gap_histogram"},
          {"limit", hist.limit},
          {"pairs", hist.total()},
          {"counts", counts_object(hist.counts)}};
}

nlohmann::json to_json(const EmpiricalNumberSet& set) {
  return {{"kind", set_kind_name(set.kind)},
          {"limit", set.limit},
          {"threshold", set.threshold},
          {"max_value", set.max_value},
          {"members", set.members},
          {"counts", counts_object(set.counts)}};
}

nlohmann::json to_json(const SyndeticityReport& report) {
  nlohmann::json doc = {
      {"mode", report.mode == SyndeticityReport::Mode::additive ? "additive" : "multiplicative"},
      {"bound", report.bound},
      {"worst", report.worst},
      {"failures", report.failures},
      {"witness_histogram", counts_object(report.witness_histogram)}};
  if (report.cutoff == kNoCutoff)
    doc["cutoff"] = nullptr;
  else
    doc["cutoff"] = report.cutoff;
  return doc;
}

nlohmann::json to_json(const Tuple& tuple, const AdmissibilityResult& result) {
  if (const auto* certificate = std::get_if<AdmissibilityCertificate>(&result)) {
    nlohmann::json cert = nlohmann::json::object();
    for (const auto& [p, r] : certificate->avoided) cert[std::to_string(p)] = r;
    return {{"admissible", true}, {"tuple", tuple.values}, {"certificate", cert}};
  }
  const auto& bad = std::get<Inadmissibility>(result);
  nlohmann::json witnesses = nlohmann::json::object();
  for (std::uint64_t r = 0; r < bad.class_witnesses.size(); ++r)
    witnesses[std::to_string(r)] = bad.class_witnesses[r];
  return {{"admissible", false},
          {"tuple", tuple.values},
          {"violating_prime", bad.prime},
          {"class_witnesses", witnesses}};
}

nlohmann::json to_json(const ExtractionResult& result, bool include_trace) {
  nlohmann::json doc = {{"kind", "extraction"},
                        {"generators", result.trace.partial.size()},
                        {"k", result.trace.steps.size()},
                        {"tuple", result.tuple.values},
                        {"chosen", result.trace.chosen}};
  if (include_trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : result.trace.steps)
      steps.push_back({{"step", s.step},
                       {"prime", s.prime},
                       {"residue", s.residue},
                       {"survivors", s.survivors},
                       {"chosen_index", s.chosen_index},
                       {"chosen_value", s.chosen_value}});
    doc["trace"] = {{"partial", result.trace.partial}, {"steps", steps}};
  }
  return doc;
}

nlohmann::json to_json(const BoundTable& table) {
  nlohmann::json requirements = nlohmann::json::array();
  for (const auto& a : table.requirements) requirements.push_back(a.str());
  const std::string n = table.generators_needed.str();
  return {{"kind", "bound"},
          {"k", table.k},
          {"generators_needed", n},
          {"digits", n.size()},
          {"requirements", requirements}};
}

nlohmann::json to_json(const TrialReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"trial", f.trial}, {"instance", f.instance}});
  return {{"kind", report.kind + "_trial"},
          {"size", report.size},
          {"value_bound", report.value_bound},
          {"trials", report.trials},
          {"seed", report.seed},
          {"set", set_params(report.set_kind, report.set_limit, report.set_threshold)},
          {"successes", report.successes},
          {"failures", failures}};
}

nlohmann::json to_json(const ProductCoverReport& report) {
  return {{"kind", "product_cover"},
          {"k", report.k},
          {"m_limit", report.m_limit},
          {"set", set_params(report.set_kind, report.set_limit, report.set_threshold)},
          {"covered", report.covered_count},
          {"uncovered", report.uncovered}};
}

nlohmann::json to_json(const EchoReport& report) {
  nlohmann::json doc = {{"kind", "best_known_echo"},
                        {"set", set_params(report.set_kind, report.set_limit,
                                           report.set_threshold)},
                        {"empty", !report.smallest.has_value()}};
  if (report.smallest) {
    doc["smallest"] = *report.smallest;
    doc["count"] = report.count;
  } else {
    doc["smallest"] = nullptr;
    doc["count"] = nullptr;
  }
  return doc;
}

nlohmann::json to_json(const Tuple& tuple, std::uint64_t shift_limit,
                       const WitnessSearchResult& result) {
  nlohmann::json doc = {{"kind", "pol_witness"},
                        {"tuple", tuple.values},
                        {"shift_limit", shift_limit},
                        {"admissible", result.tuple_admissible},
                        {"found", result.hit.has_value()}};
  if (result.hit) {
    doc["shift"] = result.hit->shift;
    doc["pair"] = {result.hit->lower, result.hit->upper};
    doc["gap"] = result.hit->gap;
  }
  return doc;
}

std::string render(const nlohmann::json& doc) { return doc.dump() + "\n"; }

namespace {

std::string csv_counts(const std::map<std::uint64_t, std::uint64_t>& counts) {
  std::ostringstream out;
  out << "m,count\n";
  for (const auto& [m, count] : counts) out << m << ',' << count << '\n';
  return out.str();
}

}  // namespace

std::string to_csv(const GapHistogram& hist) { return csv_counts(hist.counts); }

std::string to_csv(const EmpiricalNumberSet& set) { return csv_counts(set.counts); }

std::string to_csv(const SyndeticityReport& report) {
  std::ostringstream out;
  out << "witness,count\n";
  for (const auto& [w, count] : report.witness_histogram) out << w << ',' << count << '\n';
  return out.str();
}

}  // namespace pol
