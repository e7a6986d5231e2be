#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "highway/instance.hpp"
#include "highway/oracle.hpp"
#include "highway/pricing.hpp"

namespace highway {

/// Random instance recipe. Intervals are uniform over the legal ones (cycle:
/// lengths 1..n-1; tree: random recursive tree rooted at item 1, paths between
/// uniform unordered item pairs); valuations uniform over [s_gen, l_gen].
struct GeneratorSpec {
  Topology topology = Topology::line;
  int n = 1;
  std::size_t m = 1;
  std::int64_t s_gen = 1;
  std::int64_t l_gen = 1;
  std::uint64_t seed = 0;
};

/// Throws ValidationError for infeasible specs.
Instance generate(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

/// Output of one algorithm run through the CLI surface.
struct SolveResult {
  PriceVector prices;
  Rational profit;  // re-evaluated from prices
  nlohmann::json report;
};

/// `strategy` empty means the algorithm's default (derandomized for the cut
/// algorithms, exact for cyc-single). Throws ValidationError for combinations
/// that do not exist.
SolveResult solve(const Instance& instance, Algorithm algorithm, const std::string& strategy, std::uint64_t seed);

/// Certified ratio Opt/profit guaranteed for (algorithm, strategy) at ratio r,
/// plus a label naming its form.
struct CertifiedBound {
  long double value = 0;
  std::string label;
};
CertifiedBound certified_bound(Algorithm algorithm, const std::string& strategy, const Instance& instance);

/// True when the algorithm/strategy pair involves no randomness.
bool deterministic(Algorithm algorithm, const std::string& strategy);

struct ExperimentRecord {
  std::string instance_label;
  std::string digest;
  std::string algorithm;
  std::string strategy;
  std::uint64_t seed = 0;
  std::string kind;  // "run", "exact-expectation", "monte-carlo", "skipped" or "error"
  std::uint64_t samples = 1;
  Rational profit;
  PriceVector prices;  // "run" records only
  std::optional<Rational> opt;
  std::optional<Rational> ratio;  // opt / profit
  std::optional<double> half_width;
  std::string bound_label;
  long double bound = 0;
  std::optional<bool> bound_satisfied;
  std::string note;
  double wall_ms = 0;
};

struct SuiteInstance {
  std::string label;
  Instance instance;
};

struct SuiteAlgorithm {
  Algorithm algorithm = Algorithm::line_random;
  std::string strategy;
};

struct SuiteConfig {
  std::vector<SuiteInstance> instances;
  std::vector<SuiteAlgorithm> algorithms;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  bool oracle = false;
};

/// Instance file paths are resolved relative to `base_dir`.
SuiteConfig suite_config_from_json(const nlohmann::json& j, const std::string& base_dir = ".");

/// One record per (instance, algorithm) in config order. Rows run in parallel;
/// order and content do not depend on the thread count (wall_ms aside).
std::vector<ExperimentRecord> run_suite(const SuiteConfig& config);

/// Lossless CSV (num/den columns plus decimals). Wall time is left out so
/// identical configs give byte-identical files.
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
nlohmann::json records_to_json(const std::vector<ExperimentRecord>& records);

}  // namespace highway
