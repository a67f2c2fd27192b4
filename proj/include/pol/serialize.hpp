// serialize.hpp — canonical JSON/CSV renderings of the report types.
//
// nlohmann::json keeps object keys sorted, so dumping a document is
// byte-deterministic; emitters add a trailing newline and nothing else.

#pragma once

#include <string>

#include "json.hpp"
#include "pol/admissible.hpp"
#include "pol/extraction.hpp"
#include "pol/gapstats.hpp"
#include "pol/setcalc.hpp"
#include "pol/trials.hpp"

namespace pol {

nlohmann::json to_json(const GapHistogram& hist);
nlohmann::json to_json(const EmpiricalNumberSet& set);
nlohmann::json to_json(const SyndeticityReport& report);
nlohmann::json to_json(const Tuple& tuple, const AdmissibilityResult& result);
nlohmann::json to_json(const ExtractionResult& result, bool include_trace);
nlohmann::json to_json(const BoundTable& table);
nlohmann::json to_json(const TrialReport& report);
nlohmann::json to_json(const ProductCoverReport& report);
nlohmann::json to_json(const EchoReport& report);
nlohmann::json to_json(const Tuple& tuple, std::uint64_t shift_limit,
                       const WitnessSearchResult& result);

// Single compact line plus a trailing newline.
std::string render(const nlohmann::json& doc);

// Rows of (m, count), header included, ascending m.
std::string to_csv(const GapHistogram& hist);
std::string to_csv(const EmpiricalNumberSet& set);
std::string to_csv(const SyndeticityReport& report);  // (witness, count) rows

}  // namespace pol
