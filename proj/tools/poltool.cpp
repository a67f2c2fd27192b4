// poltool — one binary wiring the whole pipeline: sieving, gap statistics,
// empirical number sets, admissibility, pigeonhole extraction, bounds, and
// the randomized verification harnesses.
//
// Exit codes: 0 success, 1 computation failed (e.g. extraction starved),
// 2 bad arguments, 3 capacity guard, 4 resource/file trouble.

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pol/errors.hpp"
#include "pol/extraction.hpp"
#include "pol/serialize.hpp"
#include "pol/trials.hpp"

namespace {

struct Options {
  std::string format = "json";
  unsigned threads = 1;
  std::string cache_path;
};

std::uint64_t parse_amount(const std::string& text) {
  if (text.empty() || text[0] == '-')
    throw std::invalid_argument("not a non-negative integer: '" + text + "'");
  errno = 0;
  char* end = nullptr;
  const unsigned long long direct = std::strtoull(text.c_str(), &end, 10);
  if (errno == 0 && end != nullptr && *end == '\0') return direct;

  // scientific notation (1e8) and integral decimals
  errno = 0;
  const double d = std::strtod(text.c_str(), &end);
  if (errno != 0 || end == nullptr || *end != '\0' || !(d >= 0.0) || d > 1.8e19 ||
      d != std::floor(d))
    throw std::invalid_argument("not a non-negative integer: '" + text + "'");
  return static_cast<std::uint64_t>(d);
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(parse_amount(item));
  if (values.empty()) throw std::invalid_argument("empty list: '" + text + "'");
  return values;
}

std::string resolved_cache_path(const Options& opt) {
  if (!opt.cache_path.empty()) return opt.cache_path;
  if (const char* dir = std::getenv("POLTOOL_CACHE_DIR"); dir != nullptr && *dir != '\0')
    return std::string(dir) + "/sieve.polcache";
  return {};
}

// Load the cache when it already covers `limit`; otherwise (re)build and,
// if a path is configured, persist for the next run.
pol::SieveCache obtain_sieve(std::uint64_t limit, const Options& opt) {
  const std::string path = resolved_cache_path(opt);
  if (path.empty()) return pol::SieveCache::build(limit, opt.threads);
  if (std::filesystem::exists(path)) {
    pol::SieveCache cached = pol::SieveCache::load(path);
    if (cached.limit() >= limit) return cached;
  }
  pol::SieveCache fresh = pol::SieveCache::build(limit, opt.threads);
  fresh.save(path);
  return fresh;
}

void emit(const Options& opt, const nlohmann::json& doc, const std::string& text,
          const std::string& csv = {}) {
  if (opt.format == "json") {
    std::cout << pol::render(doc);
  } else if (opt.format == "text") {
    std::cout << text;
  } else if (opt.format == "csv") {
    if (csv.empty()) throw std::invalid_argument("csv output not available for this report");
    std::cout << csv;
  } else {
    throw std::invalid_argument("unknown format: " + opt.format);
  }
}

std::string describe_set(const pol::EmpiricalNumberSet& set) {
  std::ostringstream out;
  out << pol::set_kind_name(set.kind) << "(limit=" << set.limit
      << ", threshold=" << set.threshold;
  if (set.max_value != 0) out << ", max_value=" << set.max_value;
  out << "): " << set.members.size() << " members";
  if (!set.members.empty())
    out << ", smallest " << set.members.front() << ", largest " << set.members.back();
  out << "\n";
  return out.str();
}

std::string describe_trial(const pol::TrialReport& report) {
  std::ostringstream out;
  out << report.kind << " trial: " << report.successes << "/" << report.trials
      << " successes (seed " << report.seed << ")\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"de Polignac number toolkit: prime gaps, empirical largeness, "
               "admissible tuples, pigeonhole extraction"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format: json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "Worker threads (never changes results)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--cache", opt.cache_path,
                 "Sieve cache file (default: $POLTOOL_CACHE_DIR/sieve.polcache)");

  std::function<void()> action;

  // --- sieve -------------------------------------------------------------
  auto* sieve_cmd = app.add_subcommand("sieve", "Build (and cache) the prime sieve");
  {
    auto limit = std::make_shared<std::string>();
    sieve_cmd->add_option("--limit", *limit, "Inclusive upper bound (accepts 1e8)")->required();
    sieve_cmd->callback([&, limit] {
      action = [&, limit] {
        const std::uint64_t n = parse_amount(*limit);
        const pol::SieveCache sieve = obtain_sieve(n, opt);
        std::uint64_t largest = 0;
        sieve.for_each_prime(n, [&](std::uint64_t p) { largest = p; });
        const std::uint64_t count = sieve.count_primes(n);
        nlohmann::json doc = {{"kind", "sieve"},
                              {"limit", n},
                              {"primes", count},
                              {"largest", largest}};
        std::ostringstream text;
        text << "primes up to " << n << ": " << count << " (largest " << largest << ")\n";
        emit(opt, doc, text.str());
      };
    });
  }

  // --- nth ---------------------------------------------------------------
  auto* nth_cmd = app.add_subcommand("nth", "The n-th prime (p_1 = 2)");
  {
    auto index = std::make_shared<std::string>();
    nth_cmd->add_option("--n", *index, "1-based prime index")->required();
    nth_cmd->callback([&, index] {
      action = [&, index] {
        const std::uint64_t n = parse_amount(*index);
        const std::uint64_t p = pol::nth_prime(n);
        emit(opt, {{"kind", "nth_prime"}, {"n", n}, {"prime", p}},
             std::to_string(p) + "\n");
      };
    });
  }

  // --- gaps ---------------------------------------------------------------
  auto* gaps_cmd = app.add_subcommand("gaps", "Histogram of consecutive-prime gaps");
  {
    auto limit = std::make_shared<std::string>();
    gaps_cmd->add_option("--limit", *limit, "Inclusive upper bound")->required();
    gaps_cmd->callback([&, limit] {
      action = [&, limit] {
        const std::uint64_t n = parse_amount(*limit);
        const pol::SieveCache sieve = obtain_sieve(n, opt);
        const pol::GapHistogram hist = pol::gap_histogram(sieve, n);
        std::ostringstream text;
        text << "gaps below " << n << ": " << hist.total() << " pairs, "
             << hist.counts.size() << " distinct gap values, largest "
             << (hist.counts.empty() ? 0 : hist.counts.rbegin()->first) << "\n";
        emit(opt, pol::to_json(hist), text.str(), pol::to_csv(hist));
      };
    });
  }

  // --- empirical sets -----------------------------------------------------
  auto* pol_cmd = app.add_subcommand("pol", "Empirical de Polignac set");
  {
    auto limit = std::make_shared<std::string>();
    auto threshold = std::make_shared<std::string>("1");
    pol_cmd->add_option("--limit", *limit, "Inclusive upper bound")->required();
    pol_cmd->add_option("--threshold", *threshold, "Occurrences required for membership");
    pol_cmd->callback([&, limit, threshold] {
      action = [&, limit, threshold] {
        const std::uint64_t n = parse_amount(*limit);
        const pol::SieveCache sieve = obtain_sieve(n, opt);
        const auto set = pol::empirical_polignac(sieve, n, parse_amount(*threshold));
        emit(opt, pol::to_json(set), describe_set(set), pol::to_csv(set));
      };
    });
  }

  auto* kron_cmd = app.add_subcommand("kron", "Empirical Kronecker set");
  auto* maillet_cmd = app.add_subcommand("maillet", "Empirical Maillet set");
  {
    auto limit = std::make_shared<std::string>();
    auto max_value = std::make_shared<std::string>();
    auto threshold = std::make_shared<std::string>("1");
    for (auto* cmd : {kron_cmd, maillet_cmd}) {
      cmd->add_option("--limit", *limit, "Inclusive prime bound")->required();
      cmd->add_option("--max-value", *max_value, "Largest difference examined")->required();
    }
    kron_cmd->add_option("--threshold", *threshold, "Pairs required for membership");
    auto run = [&, limit, max_value, threshold](bool kron) {
      const std::uint64_t n = parse_amount(*limit);
      const pol::SieveCache sieve = obtain_sieve(n, opt);
      const auto set =
          kron ? pol::empirical_kronecker(sieve, n, parse_amount(*max_value),
                                          parse_amount(*threshold), opt.threads)
               : pol::empirical_maillet(sieve, n, parse_amount(*max_value), opt.threads);
      emit(opt, pol::to_json(set), describe_set(set), pol::to_csv(set));
    };
    kron_cmd->callback([&action, run] { action = [run] { run(true); }; });
    maillet_cmd->callback([&action, run] { action = [run] { run(false); }; });
  }

  // --- admissible -----------------------------------------------------------
  auto* adm_cmd = app.add_subcommand("admissible", "Admissibility certificate for a tuple");
  {
    auto tuple_text = std::make_shared<std::string>();
    adm_cmd->add_option("--tuple", *tuple_text, "Comma-separated distinct values, e.g. 0,2,6")
        ->required();
    adm_cmd->callback([&, tuple_text] {
      action = [&, tuple_text] {
        const pol::Tuple tuple = pol::Tuple::of(parse_list(*tuple_text));
        const pol::AdmissibilityResult result = pol::is_admissible(tuple);
        std::ostringstream text;
        if (const auto* cert = std::get_if<pol::AdmissibilityCertificate>(&result)) {
          text << "admissible;";
          for (const auto& [p, r] : cert->avoided) text << " mod " << p << " avoids " << r << ";";
          text << "\n";
        } else {
          text << "inadmissible at p=" << std::get<pol::Inadmissibility>(result).prime << "\n";
        }
        emit(opt, pol::to_json(tuple, result), text.str());
      };
    });
  }

  // --- extract ---------------------------------------------------------------
  auto* extract_cmd =
      app.add_subcommand("extract", "Pigeonhole-extract an admissible k-tuple");
  {
    auto gens_text = std::make_shared<std::string>();
    auto k_text = std::make_shared<std::string>();
    auto trace = std::make_shared<bool>(false);
    extract_cmd->add_option("--generators", *gens_text, "Comma-separated generators")->required();
    extract_cmd->add_option("--k", *k_text, "Tuple size to extract")->required();
    extract_cmd->add_flag("--trace", *trace, "Include the full step trace");
    extract_cmd->callback([&, gens_text, k_text, trace] {
      action = [&, gens_text, k_text, trace] {
        const auto tuple = pol::GeneratorTuple::of(parse_list(*gens_text));
        const pol::ExtractionResult result =
            pol::extract_admissible(tuple, parse_amount(*k_text));
        std::ostringstream text;
        text << "B = {";
        for (std::size_t i = 0; i < result.tuple.values.size(); ++i)
          text << (i != 0 ? ", " : "") << result.tuple.values[i];
        text << "}\n";
        emit(opt, pol::to_json(result, *trace), text.str());
      };
    });
  }

  // --- bound -------------------------------------------------------------------
  auto* bound_cmd =
      app.add_subcommand("bound", "Worst-case generator count for k-tuple extraction");
  {
    auto k_text = std::make_shared<std::string>("50");
    bound_cmd->add_option("--k", *k_text, "Tuple size (default 50)");
    bound_cmd->callback([&, k_text] {
      action = [&, k_text] {
        const pol::BoundTable table = pol::bound_table(parse_amount(*k_text));
        emit(opt, pol::to_json(table), table.generators_needed.str() + "\n");
      };
    });
  }

  // --- witness -------------------------------------------------------------------
  auto* witness_cmd =
      app.add_subcommand("witness", "Shift landing two tuple members on consecutive primes");
  {
    auto tuple_text = std::make_shared<std::string>();
    auto limit = std::make_shared<std::string>("100000");
    witness_cmd->add_option("--tuple", *tuple_text, "Comma-separated tuple")->required();
    witness_cmd->add_option("--limit", *limit, "Largest shift tried");
    witness_cmd->callback([&, tuple_text, limit] {
      action = [&, tuple_text, limit] {
        const pol::Tuple tuple = pol::Tuple::of(parse_list(*tuple_text));
        const std::uint64_t shift_limit = parse_amount(*limit);
        const pol::WitnessSearchResult result = pol::pol_witness_search(tuple, shift_limit);
        if (!result.tuple_admissible)
          std::cerr << "warning: tuple is inadmissible; the search is hopeless mod some prime\n";
        std::ostringstream text;
        if (result.hit)
          text << "shift " << result.hit->shift << ": " << result.hit->lower << " and "
               << result.hit->upper << " are consecutive primes (gap " << result.hit->gap
               << ")\n";
        else
          text << "no witness below " << shift_limit << "\n";
        emit(opt, pol::to_json(tuple, shift_limit, result), text.str());
      };
    });
  }

  // --- syndetic ---------------------------------------------------------------
  auto* syn_cmd = app.add_subcommand(
      "syndetic", "Bounded-gap diagnostic for the empirical de Polignac set");
  {
    auto mode = std::make_shared<std::string>();
    auto limit = std::make_shared<std::string>();
    auto threshold = std::make_shared<std::string>("1");
    auto bound = std::make_shared<std::string>();
    auto cutoff = std::make_shared<std::string>();
    syn_cmd->add_option("--mode", *mode, "additive or multiplicative")
        ->required()
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    syn_cmd->add_option("--limit", *limit, "Sieve/set limit")->required();
    syn_cmd->add_option("--threshold", *threshold, "Set membership threshold");
    syn_cmd->add_option("--bound", *bound, "Examine n in [1, bound]")->required();
    syn_cmd->add_option("--cutoff", *cutoff,
                        "Witness cutoff (default: none additive, 10000 multiplicative)");
    syn_cmd->callback([&, mode, limit, threshold, bound, cutoff] {
      action = [&, mode, limit, threshold, bound, cutoff] {
        const std::uint64_t n = parse_amount(*limit);
        const pol::SieveCache sieve = obtain_sieve(n, opt);
        const auto set = pol::empirical_polignac(sieve, n, parse_amount(*threshold));
        pol::SyndeticityReport report;
        if (*mode == "additive") {
          const std::uint64_t c = cutoff->empty() ? pol::kNoCutoff : parse_amount(*cutoff);
          report = pol::additive_gap_bound(set.members, parse_amount(*bound), c);
        } else {
          const std::uint64_t c = cutoff->empty() ? 10000 : parse_amount(*cutoff);
          report = pol::multiplicative_gap_bound(set.members, parse_amount(*bound), c);
        }
        std::ostringstream text;
        text << *mode << " gaps over [1, " << report.bound << "]: worst witness "
             << report.worst << ", " << report.failures.size() << " failures\n";
        emit(opt, pol::to_json(report), text.str(), pol::to_csv(report));
      };
    });
  }

  // --- verify ----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Randomized and one-shot largeness checks");
  verify_cmd->require_subcommand(1);
  {
    auto n_text = std::make_shared<std::string>("10");
    auto gen_bound = std::make_shared<std::string>("50");
    auto trials = std::make_shared<std::string>("100");
    auto seed = std::make_shared<std::string>();
    auto limit = std::make_shared<std::string>();
    auto threshold = std::make_shared<std::string>("1");

    auto* ip_cmd = verify_cmd->add_subcommand("ip", "FS-set intersection trials");
    auto* even_cmd = verify_cmd->add_subcommand("even-ip", "FS trials with even generators");
    for (auto* cmd : {ip_cmd, even_cmd}) {
      cmd->add_option("--n", *n_text, "Generators per trial");
      cmd->add_option("--gen-bound", *gen_bound, "Largest generator");
      cmd->add_option("--trials", *trials, "Trial count");
      cmd->add_option("--seed", *seed, "Master seed (required)")->required();
      cmd->add_option("--limit", *limit, "Polignac set limit")->required();
      cmd->add_option("--threshold", *threshold, "Polignac membership threshold");
    }
    auto run_ip = [&, n_text, gen_bound, trials, seed, limit, threshold](bool even) {
      const std::uint64_t lim = parse_amount(*limit);
      const pol::SieveCache sieve = obtain_sieve(lim, opt);
      const auto set = pol::empirical_polignac(sieve, lim, parse_amount(*threshold));
      const auto report =
          even ? pol::even_ip_trial(set, parse_amount(*n_text), parse_amount(*gen_bound),
                                    parse_amount(*trials), parse_amount(*seed), opt.threads)
               : pol::ip_trial(set, parse_amount(*n_text), parse_amount(*gen_bound),
                               parse_amount(*trials), parse_amount(*seed), opt.threads);
      emit(opt, pol::to_json(report), describe_trial(report));
    };
    ip_cmd->callback([&action, run_ip] { action = [run_ip] { run_ip(false); }; });
    even_cmd->callback([&action, run_ip] { action = [run_ip] { run_ip(true); }; });

    auto r_text = std::make_shared<std::string>("721");
    auto elem_bound = std::make_shared<std::string>("1000000");
    auto max_value = std::make_shared<std::string>("10000");
    auto* delta_cmd = verify_cmd->add_subcommand("delta", "Difference-set intersection trials");
    delta_cmd->add_option("--r", *r_text, "Elements per trial");
    delta_cmd->add_option("--elem-bound", *elem_bound, "Largest element");
    delta_cmd->add_option("--trials", *trials, "Trial count");
    delta_cmd->add_option("--seed", *seed, "Master seed (required)")->required();
    delta_cmd->add_option("--limit", *limit, "Kronecker set limit")->required();
    delta_cmd->add_option("--max-value", *max_value, "Kronecker candidate cap");
    delta_cmd->add_option("--threshold", *threshold, "Kronecker membership threshold");
    delta_cmd->callback([&, r_text, elem_bound, trials, seed, limit, max_value, threshold] {
      action = [&, r_text, elem_bound, trials, seed, limit, max_value, threshold] {
        const std::uint64_t lim = parse_amount(*limit);
        const pol::SieveCache sieve = obtain_sieve(lim, opt);
        const auto set = pol::empirical_kronecker(sieve, lim, parse_amount(*max_value),
                                                  parse_amount(*threshold), opt.threads);
        const auto report =
            pol::delta_trial(set, parse_amount(*r_text), parse_amount(*elem_bound),
                             parse_amount(*trials), parse_amount(*seed), opt.threads);
        emit(opt, pol::to_json(report), describe_trial(report));
      };
    });

    auto k_text = std::make_shared<std::string>("4");
    auto m_limit = std::make_shared<std::string>("1000");
    auto* product_cmd =
        verify_cmd->add_subcommand("product", "Multiples of k covered by the product set A*A");
    product_cmd->add_option("--k", *k_text, "Multiple base");
    product_cmd->add_option("--m-limit", *m_limit, "Check k*m for m <= m_limit");
    product_cmd->add_option("--limit", *limit, "Polignac set limit")->required();
    product_cmd->add_option("--threshold", *threshold, "Polignac membership threshold");
    product_cmd->callback([&, k_text, m_limit, limit, threshold] {
      action = [&, k_text, m_limit, limit, threshold] {
        const std::uint64_t lim = parse_amount(*limit);
        const pol::SieveCache sieve = obtain_sieve(lim, opt);
        const auto set = pol::empirical_polignac(sieve, lim, parse_amount(*threshold));
        const auto report =
            pol::product_cover_check(set, parse_amount(*k_text), parse_amount(*m_limit));
        std::ostringstream text;
        text << "covered " << report.covered_count << "/" << report.m_limit << " multiples of "
             << report.k << "\n";
        emit(opt, pol::to_json(report), text.str());
      };
    });

    auto* echo_cmd =
        verify_cmd->add_subcommand("echo", "Smallest member of the empirical set and its count");
    echo_cmd->add_option("--limit", *limit, "Polignac set limit")->required();
    echo_cmd->add_option("--threshold", *threshold, "Polignac membership threshold");
    echo_cmd->callback([&, limit, threshold] {
      action = [&, limit, threshold] {
        const std::uint64_t lim = parse_amount(*limit);
        const pol::SieveCache sieve = obtain_sieve(lim, opt);
        const auto set = pol::empirical_polignac(sieve, lim, parse_amount(*threshold));
        const auto report = pol::best_known_echo(set);
        std::ostringstream text;
        if (report.smallest)
          text << "smallest member " << *report.smallest << " (count " << report.count << ")\n";
        else
          text << "set is empty at these parameters\n";
        emit(opt, pol::to_json(report), text.str());
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (const pol::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pol::InsufficientGeneratorsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
