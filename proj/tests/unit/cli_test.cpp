#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ctest runs each case in its own process, possibly concurrently
const fs::path kDir = fs::temp_directory_path() / ("highway_cli_test_" + std::to_string(::getpid()));

int run(const std::string& args, std::string* out = nullptr) {
  fs::create_directories(kDir);
  const fs::path capture = kDir / "stdout.txt";
  const std::string cmd = std::string(HIGHWAY_CLI) + " " + args + " > " + capture.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write(const std::string& name, const std::string& text) {
  fs::create_directories(kDir);
  std::ofstream(kDir / name) << text;
  return kDir / name;
}

}  // namespace

TEST(Cli, GenSolveEval) {
  const auto inst = kDir / "gen.json";
  ASSERT_EQ(run("gen --topology line --n 4 --m 5 --s 1 --l 3 --seed 7 --out " + inst.string()), 0);
  const auto prices = kDir / "prices.json";
  const auto report = kDir / "report.json";
  ASSERT_EQ(run("solve --instance " + inst.string() + " --algo line-sl --seed 2 --out " + prices.string() +
                " --report " + report.string()),
            0);
  std::string out;
  ASSERT_EQ(run("eval --instance " + inst.string() + " --prices " + prices.string(), &out), 0);
  const json evaluated = json::parse(out);
  std::ifstream in(report);
  const json solved = json::parse(in);
  EXPECT_EQ(evaluated["profit"]["num"], solved["profit"]["num"]);
  EXPECT_EQ(evaluated["profit"]["den"], solved["profit"]["den"]);
}

TEST(Cli, OracleRoutes) {
  const auto inst = write("tri.json", R"({"topology":"cycle","n":3,"customers":[
      {"start":1,"end":2,"w":1},{"start":2,"end":3,"w":1},{"start":3,"end":1,"w":1}]})");
  std::string out;
  ASSERT_EQ(run("oracle --instance " + inst.string(), &out), 0);
  EXPECT_EQ(json::parse(out)["opt"]["num"], 3);
  ASSERT_EQ(run("oracle --route lattice --instance " + inst.string(), &out), 0);
  EXPECT_EQ(json::parse(out)["opt"]["num"], 2);
}

TEST(Cli, ExitCodes) {
  const auto bad = write("bad.json", R"({"topology":"cycle","n":3,"customers":[{"start":2,"end":1,"w":1}]})");
  EXPECT_EQ(run("solve --instance " + bad.string() + " --algo cycle-sl"), 2);
  const auto big = write("big.json", R"({"topology":"line","n":7,"customers":[{"start":1,"end":7,"w":1}]})");
  EXPECT_EQ(run("oracle --instance " + big.string()), 3);
  EXPECT_EQ(run("solve --instance " + big.string() + " --algo nothing"), 2);
  EXPECT_EQ(run("bounds --r 3/2"), 2);
  EXPECT_EQ(run("eval --instance " + big.string() + " --prices " + write("p.json", "[1,2]").string()), 2);
  EXPECT_EQ(run("--threads 2 bounds --r 1/2"), 0);
}

TEST(Cli, BoundsTable) {
  std::string out;
  ASSERT_EQ(run("bounds --r 1/4 --r 1/2 --r 3/5", &out), 0);
  const json rows = json::parse(out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["regime"], "4(1-ln r)");
  EXPECT_EQ(rows[1]["regime"], "3/r");
  EXPECT_EQ(rows[2]["regime"], "6");
}

TEST(Cli, BenchWritesIdenticalCsv) {
  const auto config = write("suite.json", R"({"seed":4,"trials":200,"oracle":true,
      "instances":[{"generate":{"topology":"line","n":3,"m":4,"s":1,"l":3,"seed":1},"count":5}],
      "algorithms":[{"algo":"line-random"},{"algo":"line-cut"}]})");
  const auto a = kDir / "a.csv";
  const auto b = kDir / "b.csv";
  const auto report = kDir / "suite_report.json";
  ASSERT_EQ(run("--threads 1 bench --config " + config.string() + " --csv " + a.string()), 0);
  ASSERT_EQ(run("--threads 3 bench --config " + config.string() + " --csv " + b.string() + " --report " +
                report.string()),
            0);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_EQ(slurp(a), slurp(b));
  std::ifstream in(report);
  const json j = json::parse(in);
  EXPECT_EQ(j["summary"]["rows"], 10);
  EXPECT_EQ(j["summary"]["satisfied"], j["summary"]["checked"]);
}
