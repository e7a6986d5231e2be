#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "highway/errors.hpp"
#include "highway/experiment.hpp"
#include "highway/io.hpp"
#include "highway/line.hpp"
#include "highway/parallel.hpp"

using namespace highway;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_json(path, j);
  }
}

json bounds_table(const Rational& r) {
  const RatioBound b = combined_line_bound(r);
  const long double x = r.to_long_double();
  json j;
  j["r"] = io::to_json(r);
  j["alpha"] = static_cast<double>(alpha_root());
  j["inv_sqrt_e"] = static_cast<double>(1.0L / std::sqrt(std::exp(1.0L)));
  j["regime"] = std::string(to_string(b.regime));
  j["bound"] = static_cast<double>(b.value);
  j["candidates"] = {{"4(1-ln r)", static_cast<double>(4.0L * (1.0L - std::log(x)))},
                     {"3/r", static_cast<double>(3.0L / x)},
                     {"6", 6.0}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_env();

  CLI::App app{"Coupon-model highway pricing: algorithms, oracles and experiments"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (overrides HIGHWAY_THREADS)");

  GeneratorSpec spec;
  std::string topology = "line";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--topology", topology)->check(CLI::IsMember({"line", "cycle", "tree"}));
  gen->add_option("--n", spec.n)->required();
  gen->add_option("--m", spec.m)->required();
  gen->add_option("--s", spec.s_gen, "smallest valuation");
  gen->add_option("--l", spec.l_gen, "largest valuation");
  gen->add_option("--seed", spec.seed);
  gen->add_option("--out", gen_out, "instance file (stdout if omitted)");

  std::string instance_path;
  std::string prices_path;
  std::string model_text = "coupon";
  auto* eval = app.add_subcommand("eval", "Profit of a price vector");
  eval->add_option("--instance", instance_path)->required();
  eval->add_option("--prices", prices_path)->required();
  eval->add_option("--model", model_text, "positive | discount | bounded:B | coupon");

  std::string algo_text;
  std::string strategy;
  std::uint64_t seed = 0;
  std::string solve_out;
  std::string report_path;
  auto* solve_cmd = app.add_subcommand("solve", "Run one pricing algorithm");
  solve_cmd->add_option("--instance", instance_path)->required();
  solve_cmd->add_option("--algo", algo_text)
      ->required()
      ->check(CLI::IsMember({"line-random", "line-cut", "line-sl", "cycle-sl", "cyc-single", "tree-random"}));
  solve_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"random", "derandomized", "exact", "local"}));
  solve_cmd->add_option("--seed", seed);
  solve_cmd->add_option("--out", solve_out, "price file (stdout if omitted)");
  solve_cmd->add_option("--report", report_path, "run report");

  std::string route = "vertex";
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum on a small instance");
  oracle->add_option("--instance", instance_path)->required();
  oracle->add_option("--route", route)->check(CLI::IsMember({"vertex", "lattice"}));
  oracle->add_option("--out", oracle_out);

  std::string config_path;
  std::string csv_path;
  std::string bench_report;
  auto* bench = app.add_subcommand("bench", "Run an experiment suite");
  bench->add_option("--config", config_path)->required();
  bench->add_option("--csv", csv_path, "CSV output (stdout if omitted)");
  bench->add_option("--report", bench_report, "structured JSON report");

  std::vector<std::string> ratios;
  auto* bounds = app.add_subcommand("bounds", "Regime table of the combined line guarantee");
  bounds->add_option("--r", ratios, "ratio s/l as p/q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  if (threads > 0) set_threads(threads);

  try {
    if (gen->parsed()) {
      spec.topology = parse_topology(topology);
      if (spec.l_gen < spec.s_gen) spec.l_gen = spec.s_gen;
      emit(io::to_json(generate(spec)), gen_out);
    } else if (eval->parsed()) {
      const Instance inst = io::read_instance(instance_path);
      const PriceModel model = PriceModel::parse(model_text);
      const Rational value = profit(inst, io::read_prices(prices_path), model);
      emit({{"model", model.str()}, {"profit", io::to_json(value)}}, "");
    } else if (solve_cmd->parsed()) {
      const Instance inst = io::read_instance(instance_path);
      SolveResult r = solve(inst, parse_algorithm(algo_text), strategy, seed);
      emit(io::prices_to_json(r.prices), solve_out);
      if (!report_path.empty()) io::write_json(report_path, r.report);
    } else if (oracle->parsed()) {
      const Instance inst = io::read_instance(instance_path);
      const OracleResult r = route == "vertex" ? exact_opt_coupon(inst) : lattice_opt_coupon(inst);
      json j = io::to_json(r);
      j["route"] = route;
      emit(j, oracle_out);
    } else if (bench->parsed()) {
      const auto base = std::filesystem::path(config_path).parent_path().string();
      const SuiteConfig config = suite_config_from_json(io::read_json(config_path), base.empty() ? "." : base);
      const auto records = run_suite(config);
      if (csv_path.empty()) {
        write_csv(std::cout, records);
      } else {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        write_csv(out, records);
      }
      if (!bench_report.empty()) io::write_json(bench_report, records_to_json(records));
    } else if (bounds->parsed()) {
      json rows = json::array();
      for (const auto& text : ratios) {
        Rational r;
        try {
          r = Rational::parse(text);
        } catch (const std::exception& e) {
          throw ValidationError("bad ratio '" + text + "': " + e.what());
        }
        if (r <= Rational(0) || r > Rational(1)) throw ValidationError("ratio must lie in (0, 1]: " + text);
        rows.push_back(bounds_table(r));
      }
      emit(rows, "");
    }
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ConstraintError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
