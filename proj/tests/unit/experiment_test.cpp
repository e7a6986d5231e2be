#include <gtest/gtest.h>

#include <sstream>

#include "brute_force.hpp"
#include "highway/errors.hpp"
#include "highway/experiment.hpp"
#include "highway/io.hpp"

using namespace highway;
using nlohmann::json;

namespace {

std::string csv_of(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  write_csv(out, records);
  return out.str();
}

}  // namespace

TEST(Solve, StrategyValidation) {
  Instance line = make_line(3, {{1, 2, 2}, {2, 3, 1}});
  EXPECT_NO_THROW(solve(line, Algorithm::line_cut, "random", 1));
  EXPECT_THROW(solve(line, Algorithm::line_cut, "exact", 1), ValidationError);
  EXPECT_THROW(solve(line, Algorithm::line_random, "derandomized", 1), ValidationError);
  EXPECT_THROW(solve(line, Algorithm::cycle_sl, "", 1), ValidationError);
  Instance cyc = make_cycle(3, {{1, 2, 1}, {3, 3, 1}});
  for (const char* s : {"", "exact", "local", "derandomized"}) EXPECT_NO_THROW(solve(cyc, Algorithm::cyc_single, s, 1));
  EXPECT_THROW(solve(cyc, Algorithm::cyc_single, "random", 1), ValidationError);
}

TEST(Solve, ProfitIsReEvaluated) {
  for (auto [algo, topology] : {std::pair{Algorithm::line_sl, Topology::line},
                                std::pair{Algorithm::cycle_sl, Topology::cycle},
                                std::pair{Algorithm::tree_random, Topology::tree}}) {
    Instance inst = bf::random_instance(topology, 4, 5, 1, 3, 2);
    auto r = solve(inst, algo, "", 3);
    EXPECT_EQ(r.profit, bf::coupon_profit(inst, r.prices));
    EXPECT_EQ(io::rational_from_json(r.report["profit"]), r.profit);
  }
}

TEST(Bound, CertifiedValues) {
  Instance half = make_line(2, {{1, 1, 1}, {2, 2, 2}});
  EXPECT_EQ(certified_bound(Algorithm::line_random, "", half).label, "3/r");
  EXPECT_NEAR(static_cast<double>(certified_bound(Algorithm::line_random, "", half).value), 6.0, 1e-12);
  EXPECT_EQ(certified_bound(Algorithm::line_cut, "", half).label, "4(1-ln r)");
  Instance cyc = make_cycle(3, {{1, 2, 1}});
  EXPECT_NEAR(static_cast<double>(certified_bound(Algorithm::cyc_single, "exact", cyc).value), 2.5, 1e-12);
  EXPECT_NEAR(static_cast<double>(certified_bound(Algorithm::cyc_single, "local", cyc).value), 4.0, 1e-12);
  EXPECT_TRUE(deterministic(Algorithm::line_cut, ""));
  EXPECT_FALSE(deterministic(Algorithm::line_cut, "random"));
  EXPECT_FALSE(deterministic(Algorithm::tree_random, ""));
}

TEST(Suite, EmptyAlgorithmList) {
  SuiteConfig config = suite_config_from_json(json::parse(R"({"instances":[{"generate":
      {"topology":"line","n":3,"m":2,"s":1,"l":2,"seed":1},"count":3}],"algorithms":[]})"));
  EXPECT_EQ(config.instances.size(), 3u);
  EXPECT_TRUE(run_suite(config).empty());
}

TEST(Suite, UnknownAlgorithmRejected) {
  EXPECT_THROW(suite_config_from_json(json::parse(R"({"algorithms":[{"algo":"nope"}]})")), ValidationError);
  EXPECT_THROW(suite_config_from_json(json::parse(R"({"instances":[{"url":"x"}]})")), ValidationError);
}

TEST(Suite, LineSuiteSatisfiesBounds) {
  SuiteConfig config = suite_config_from_json(json::parse(R"({"seed":3,"trials":2000,"oracle":true,
      "instances":[{"generate":{"topology":"line","n":4,"m":5,"s":1,"l":3,"seed":100},"count":50}],
      "algorithms":[{"algo":"line-sl"},{"algo":"line-cut","strategy":"derandomized"}]})"));
  auto records = run_suite(config);
  ASSERT_EQ(records.size(), 100u);
  for (const auto& r : records) {
    ASSERT_TRUE(r.bound_satisfied.has_value()) << r.note;
    EXPECT_TRUE(*r.bound_satisfied) << r.instance_label << " " << r.algorithm;
    if (r.ratio) EXPECT_EQ(*r.ratio * r.profit, *r.opt);
  }
  EXPECT_EQ(records[0].algorithm, "line-sl");
  EXPECT_EQ(records[1].algorithm, "line-cut");
  EXPECT_EQ(records[0].instance_label, records[1].instance_label);
}

TEST(Suite, RerunIsByteIdentical) {
  const json config_json = json::parse(R"({"seed":11,"trials":300,"oracle":true,
      "instances":[{"generate":{"topology":"cycle","n":6,"m":6,"s":1,"l":4,"seed":5},"count":4},
                   {"generate":{"topology":"tree","n":4,"m":3,"s":2,"l":3,"seed":9},"count":3}],
      "algorithms":[{"algo":"cycle-sl"},{"algo":"cycle-sl","strategy":"random"},{"algo":"tree-random"}]})");
  SuiteConfig config = suite_config_from_json(config_json);
  const std::string first = csv_of(run_suite(config));
  const std::string second = csv_of(run_suite(suite_config_from_json(config_json)));
  EXPECT_EQ(first, second);
  // rows with the wrong topology are reported, not fatal
  EXPECT_NE(first.find(",skipped,"), std::string::npos);
  EXPECT_EQ(first.find(",error,"), std::string::npos);
}

TEST(Suite, OracleGuardFlagsRecord) {
  SuiteConfig config = suite_config_from_json(json::parse(R"({"oracle":true,
      "instances":[{"generate":{"topology":"line","n":8,"m":3,"s":1,"l":2,"seed":1}}],
      "algorithms":[{"algo":"line-cut"}]})"));
  auto records = run_suite(config);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(records[0].opt.has_value());
  EXPECT_FALSE(records[0].note.empty());
  EXPECT_EQ(records[0].kind, "run");
  auto j = records_to_json(records);
  EXPECT_EQ(j["summary"]["rows"], 1);
}

TEST(Suite, FileSourcesResolveAgainstBaseDir) {
  const auto dir = std::filesystem::temp_directory_path() / "highway_suite_test";
  std::filesystem::create_directories(dir);
  io::write_json(dir / "inst.json", io::to_json(make_line(2, {{1, 2, 1}})));
  SuiteConfig config = suite_config_from_json(
      json::parse(R"({"instances":[{"file":"inst.json"}],"algorithms":[{"algo":"line-random"}]})"), dir.string());
  auto records = run_suite(config);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].kind, "exact-expectation");
  EXPECT_EQ(records[0].instance_label, "inst.json");
}

TEST(Io, RationalForms) {
  EXPECT_EQ(io::rational_from_json(json(3)), Rational(3));
  EXPECT_EQ(io::rational_from_json(json("-2/4")), Rational(-1, 2));
  EXPECT_EQ(io::rational_from_json(json::parse(R"({"num":1,"den":3})")), Rational(1, 3));
  EXPECT_THROW(io::rational_from_json(json(1.5)), ValidationError);
  EXPECT_THROW(io::rational_from_json(json("1/0")), ValidationError);
  auto j = io::to_json(Rational(-7, 2));
  EXPECT_EQ(j["num"], -7);
  EXPECT_EQ(j["den"], 2);
  EXPECT_EQ(j["decimal"], "-3.500000");
}

TEST(Io, InstanceRoundTripAndDigest) {
  Instance inst = make_tree({0, 1, 1}, {{2, 3, 4}});
  Instance again = validate_instance(io::raw_instance_from_json(io::to_json(inst)));
  EXPECT_EQ(again.customers(), inst.customers());
  EXPECT_EQ(io::digest(again), io::digest(inst));
  EXPECT_NE(io::digest(inst), io::digest(make_tree({0, 1, 1}, {{2, 3, 5}})));
  EXPECT_THROW(io::raw_instance_from_json(json::parse(R"({"n":2})")), ValidationError);
  EXPECT_EQ(io::prices_from_json(json::parse(R"([1,"1/2"])")), (PriceVector{Rational(1), Rational(1, 2)}));
}
