#include "highway/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>

#include "highway/cycle.hpp"
#include "highway/io.hpp"
#include "highway/line.hpp"
#include "highway/tree.hpp"

namespace highway {

using nlohmann::json;

Instance generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw ValidationError("generator: n must be at least 1");
  if (spec.s_gen < 1 || spec.s_gen > spec.l_gen) throw ValidationError("generator: need 1 <= s_gen <= l_gen");
  if (spec.topology == Topology::cycle && spec.n < 2 && spec.m > 0) {
    throw ValidationError("generator: a cycle needs n >= 2 to hold any customer");
  }
  std::mt19937_64 rng(spec.seed);
  RawInstance raw;
  raw.topology = std::string(to_string(spec.topology));
  raw.n = spec.n;

  std::vector<std::pair<int, int>> shapes;
  const int n = spec.n;
  switch (spec.topology) {
    case Topology::line:
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) shapes.emplace_back(a, b);
      break;
    case Topology::cycle:
      for (int a = 1; a <= n; ++a)
        for (int len = 1; len <= n - 1; ++len) shapes.emplace_back(a, (a - 1 + len - 1) % n + 1);
      break;
    case Topology::tree: {
      raw.parents.push_back(0);
      for (int i = 2; i <= n; ++i) {
        std::uniform_int_distribution<int> parent(1, i - 1);
        raw.parents.push_back(parent(rng));
      }
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) shapes.emplace_back(a, b);
      break;
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::uniform_int_distribution<std::int64_t> value(spec.s_gen, spec.l_gen);
  for (std::size_t j = 0; j < spec.m; ++j) {
    auto [a, b] = shapes[pick(rng)];
    raw.customers.push_back({a, b, value(rng)});
  }
  return validate_instance(raw);
}

GeneratorSpec generator_spec_from_json(const json& j) {
  try {
    GeneratorSpec spec;
    spec.topology = parse_topology(j.at("topology").get<std::string>());
    spec.n = j.at("n").get<int>();
    spec.m = j.at("m").get<std::size_t>();
    spec.s_gen = j.value("s", std::int64_t{1});
    spec.l_gen = j.value("l", spec.s_gen);
    spec.seed = j.value("seed", std::uint64_t{0});
    return spec;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed generator spec: ") + e.what());
  }
}

namespace {

json sums_json(const PartialSums& sums) {
  json list = json::array();
  for (const auto& s : sums.values) list.push_back(io::to_json(s));
  return list;
}

json marking_json(const Marking& marking) {
  std::string text;
  for (Side side : marking.sides) text += side == Side::L ? 'L' : 'R';
  return text;
}

[[noreturn]] void bad_strategy(Algorithm algorithm, const std::string& strategy) {
  throw ValidationError("strategy '" + strategy + "' is not available for " + std::string(to_string(algorithm)));
}

CutStrategy cut_strategy(Algorithm algorithm, const std::string& strategy) {
  if (strategy.empty() || strategy == "derandomized") return CutStrategy::derandomized;
  if (strategy == "random") return CutStrategy::random;
  bad_strategy(algorithm, strategy);
}

DicutStrategy dicut_strategy(const std::string& strategy) {
  if (strategy.empty() || strategy == "exact") return DicutStrategy::exact;
  if (strategy == "local") return DicutStrategy::local;
  if (strategy == "derandomized") return DicutStrategy::derandomized;
  bad_strategy(Algorithm::cyc_single, strategy);
}

json line_report_json(const LineRunReport& r) {
  json j{{"profit", io::to_json(r.profit)}, {"source", r.source}, {"regime", std::string(to_string(r.regime))}};
  if (r.chosen_x) j["chosen_x"] = *r.chosen_x;
  if (r.marking) j["marking"] = marking_json(*r.marking);
  if (r.sums) j["partial_sums"] = sums_json(*r.sums);
  return j;
}

}  // namespace

SolveResult solve(const Instance& instance, Algorithm algorithm, const std::string& strategy, std::uint64_t seed) {
  SolveResult out;
  json report{{"algorithm", std::string(to_string(algorithm))}, {"seed", seed}};
  switch (algorithm) {
    case Algorithm::line_random: {
      if (!strategy.empty() && strategy != "random") bad_strategy(algorithm, strategy);
      LineRunReport r = line_random(instance, seed);
      out.prices = r.prices;
      report.update(line_report_json(r));
      report["strategy"] = "random";
      break;
    }
    case Algorithm::line_cut: {
      CutStrategy s = cut_strategy(algorithm, strategy);
      LineRunReport r = line_cut(instance, s, seed);
      out.prices = r.prices;
      report.update(line_report_json(r));
      report["strategy"] = s == CutStrategy::random ? "random" : "derandomized";
      break;
    }
    case Algorithm::line_sl: {
      if (!strategy.empty() && strategy != "derandomized") bad_strategy(algorithm, strategy);
      LineRunReport r = line_combined(instance, seed);
      out.prices = r.prices;
      report.update(line_report_json(r));
      report["strategy"] = "derandomized";
      break;
    }
    case Algorithm::cycle_sl: {
      CutStrategy s = cut_strategy(algorithm, strategy);
      CycleRunReport r = cycle_sl(instance, s, seed);
      out.prices = r.prices;
      report["strategy"] = s == CutStrategy::random ? "random" : "derandomized";
      report["marking"] = marking_json(r.marking);
      if (r.chosen_x) report["chosen_x"] = *r.chosen_x;
      json kept = json::array();
      for (const auto& arc : r.kept) kept.push_back(arc.customer);
      report["kept_customers"] = kept;
      break;
    }
    case Algorithm::cyc_single: {
      DicutStrategy s = dicut_strategy(strategy);
      CycSingleReport r = cyc_single_val(instance, std::nullopt, s, seed);
      out.prices = r.prices;
      report["strategy"] = strategy.empty() ? "exact" : strategy;
      report["pivot"] = r.pivot;
      report["sigma_profit"] = io::to_json(r.sigma_profit);
      report["tau_profit"] = io::to_json(r.tau_profit);
      report["in_profit"] = io::to_json(r.in_profit);
      report["in_count"] = r.in_count;
      report["pivot_price"] = r.pivot_price;
      report["dicut_value"] = r.dicut_value;
      report["a"] = r.a;
      report["certified_ratio"] = io::to_json(r.certified_ratio);
      report["output"] = r.chose_sigma ? "sigma" : "tau";
      break;
    }
    case Algorithm::tree_random: {
      if (!strategy.empty() && strategy != "random") bad_strategy(algorithm, strategy);
      TreeRunReport r = tree_random(instance, seed);
      out.prices = r.prices;
      report["strategy"] = "random";
      report["root"] = r.root;
      report["partial_sums"] = r.sums;
      break;
    }
  }
  out.profit = profit(instance, out.prices);
  report["profit"] = io::to_json(out.profit);
  report["prices"] = io::prices_to_json(out.prices)["prices"];
  out.report = std::move(report);
  return out;
}

CertifiedBound certified_bound(Algorithm algorithm, const std::string& strategy, const Instance& instance) {
  if (instance.m() == 0) return {1.0L, "empty"};
  const Rational r = valuation_profile(instance).ratio;
  switch (algorithm) {
    case Algorithm::line_random:
      return {random_ratio_bound(r), r <= Rational(1, 2) ? "3/r" : "6"};
    case Algorithm::line_cut:
    case Algorithm::cycle_sl: return {cut_ratio_bound(r), "4(1-ln r)"};
    case Algorithm::line_sl: {
      RatioBound b = combined_line_bound(r);
      return {b.value, std::string(to_string(b.regime))};
    }
    case Algorithm::cyc_single: {
      int a = certified_a(dicut_strategy(strategy));
      return {static_cast<long double>(3 * a + 4) / 4.0L, "(3a+4)/4,a=" + std::to_string(a)};
    }
    case Algorithm::tree_random: return {tree_ratio_bound(r), "16/(3r)"};
  }
  return {0, "?"};
}

bool deterministic(Algorithm algorithm, const std::string& strategy) {
  switch (algorithm) {
    case Algorithm::line_cut:
    case Algorithm::cycle_sl: return strategy.empty() || strategy == "derandomized";
    case Algorithm::cyc_single: return true;
    default: return false;
  }
}

SuiteConfig suite_config_from_json(const json& j, const std::string& base_dir) {
  SuiteConfig config;
  try {
    config.trials = j.value("trials", config.trials);
    config.seed = j.value("seed", config.seed);
    config.oracle = j.value("oracle", false);
    for (const auto& a : j.value("algorithms", json::array())) {
      SuiteAlgorithm alg;
      alg.algorithm = parse_algorithm(a.at("algo").get<std::string>());
      alg.strategy = a.value("strategy", std::string());
      config.algorithms.push_back(alg);
    }
    for (const auto& src : j.value("instances", json::array())) {
      if (src.contains("file")) {
        std::filesystem::path path = src.at("file").get<std::string>();
        if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
        config.instances.push_back({path.filename().string(), io::read_instance(path)});
      } else if (src.contains("generate")) {
        GeneratorSpec spec = generator_spec_from_json(src.at("generate"));
        const auto count = src.value("count", std::size_t{1});
        for (std::size_t i = 0; i < count; ++i) {
          GeneratorSpec s = spec;
          s.seed = spec.seed + i;
          config.instances.push_back({std::string(to_string(s.topology)) + "-gen-" + std::to_string(s.seed),
                                      generate(s)});
        }
      } else {
        throw ValidationError("instance source needs 'file' or 'generate'");
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed suite config: ") + e.what());
  }
  return config;
}

namespace {

bool within_bound(const Rational& opt, const Rational& achieved, double slack, long double bound) {
  const long double lhs = opt.to_long_double();
  const long double rhs = bound * (achieved.to_long_double() + static_cast<long double>(slack));
  return lhs <= rhs * (1.0L + 1e-12L) + 1e-12L;
}

ExperimentRecord run_row(const SuiteConfig& config, const SuiteInstance& si, const SuiteAlgorithm& sa) {
  const auto started = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.instance_label = si.label;
  rec.digest = io::digest(si.instance);
  rec.algorithm = std::string(to_string(sa.algorithm));
  rec.strategy = sa.strategy;
  rec.seed = config.seed;
  try {
    const Instance& inst = si.instance;
    const CertifiedBound bound = certified_bound(sa.algorithm, sa.strategy, inst);
    rec.bound = bound.value;
    rec.bound_label = bound.label;
    double slack = 0;
    if (deterministic(sa.algorithm, sa.strategy)) {
      SolveResult r = solve(inst, sa.algorithm, sa.strategy, config.seed);
      rec.kind = "run";
      rec.prices = r.prices;
      rec.profit = profit(inst, r.prices);
    } else {
      const bool exact_ok = sa.algorithm != Algorithm::line_cut && sa.algorithm != Algorithm::cycle_sl &&
                            expectation_space_size(sa.algorithm, inst) <= kExpectationGuard;
      if (exact_ok) {
        rec.kind = "exact-expectation";
        rec.samples = expectation_space_size(sa.algorithm, inst);
        rec.profit = exact_expectation(sa.algorithm, inst, Execution::serial);
      } else {
        rec.kind = "monte-carlo";
        MonteCarloSummary mc = monte_carlo(sa.algorithm, inst, config.trials, config.seed, Execution::serial);
        rec.samples = mc.trials;
        rec.profit = mc.mean;
        rec.half_width = mc.half_width;
        slack = mc.half_width;
      }
    }
    if (config.oracle) {
      try {
        rec.opt = exact_opt_coupon(inst, Execution::serial).opt;
        if (rec.profit != Rational(0)) rec.ratio = *rec.opt / rec.profit;
        rec.bound_satisfied = within_bound(*rec.opt, rec.profit, slack, rec.bound);
      } catch (const GuardError& e) {
        rec.note = e.what();
      }
    }
  } catch (const ValidationError& e) {
    // algorithm does not apply to this instance (topology, valuation shape)
    rec.kind = "skipped";
    rec.note = e.what();
  } catch (const std::exception& e) {
    rec.kind = "error";
    rec.note = e.what();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return rec;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rational_cells(const std::optional<Rational>& value) {
  if (!value) return ",,";
  return std::to_string(value->num()) + "," + std::to_string(value->den()) + "," + value->decimal(6);
}

}  // namespace

std::vector<ExperimentRecord> run_suite(const SuiteConfig& config) {
  const std::size_t algos = config.algorithms.size();
  const std::size_t rows = config.instances.size() * algos;
  std::vector<ExperimentRecord> records(rows);
#pragma omp parallel for schedule(dynamic)
  for (long long row = 0; row < static_cast<long long>(rows); ++row) {
    const auto& si = config.instances[static_cast<std::size_t>(row) / algos];
    const auto& sa = config.algorithms[static_cast<std::size_t>(row) % algos];
    records[row] = run_row(config, si, sa);
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "instance,digest,algorithm,strategy,seed,kind,samples,profit_num,profit_den,profit_decimal,"
         "opt_num,opt_den,opt_decimal,ratio_num,ratio_den,ratio_decimal,half_width,bound_label,bound,"
         "bound_satisfied,note\n";
  for (const auto& r : records) {
    char bound[64];
    std::snprintf(bound, sizeof bound, "%.9Lf", r.bound);
    std::string hw;
    if (r.half_width) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.9f", *r.half_width);
      hw = buf;
    }
    out << csv_field(r.instance_label) << ',' << r.digest << ',' << r.algorithm << ',' << csv_field(r.strategy)
        << ',' << r.seed << ',' << r.kind << ',' << r.samples << ',' << rational_cells(r.profit) << ','
        << rational_cells(r.opt) << ',' << rational_cells(r.ratio) << ',' << hw << ',' << csv_field(r.bound_label)
        << ',' << bound << ',' << (r.bound_satisfied ? (*r.bound_satisfied ? "true" : "false") : "") << ','
        << csv_field(r.note) << '\n';
  }
}

json records_to_json(const std::vector<ExperimentRecord>& records) {
  json list = json::array();
  std::size_t checked = 0;
  std::size_t satisfied = 0;
  for (const auto& r : records) {
    json j{{"instance", r.instance_label},
           {"digest", r.digest},
           {"algorithm", r.algorithm},
           {"strategy", r.strategy},
           {"seed", r.seed},
           {"kind", r.kind},
           {"samples", r.samples},
           {"profit", io::to_json(r.profit)},
           {"bound_label", r.bound_label},
           {"bound", static_cast<double>(r.bound)},
           {"wall_ms", r.wall_ms}};
    if (!r.prices.empty()) j["prices"] = io::prices_to_json(r.prices)["prices"];
    if (r.opt) j["opt"] = io::to_json(*r.opt);
    if (r.ratio) j["ratio"] = io::to_json(*r.ratio);
    if (r.half_width) j["half_width"] = *r.half_width;
    if (r.bound_satisfied) {
      j["bound_satisfied"] = *r.bound_satisfied;
      ++checked;
      satisfied += *r.bound_satisfied ? 1 : 0;
    }
    if (!r.note.empty()) j["note"] = r.note;
    list.push_back(std::move(j));
  }
  return {{"records", list}, {"summary", {{"rows", records.size()}, {"checked", checked}, {"satisfied", satisfied}}}};
}

}  // namespace highway
