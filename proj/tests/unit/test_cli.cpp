// Runs the polya binary; POLYA_CLI and POLYA_DATA_DIR come from the build.
#include "polya/json_io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace polya;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run_cli(const std::string& args) {
  const std::string cmd = std::string(POLYA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Result r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(POLYA_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polya_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ComposeProductWritesFourColourUrn) {
  const fs::path out = dir_ / "cf.json";
  const Result r = run_cli("compose product " + data("classic.json") + " " + data("friedman.json") +
                           " --out " + out.string());
  ASSERT_EQ(r.code, 0);
  const UrnDocument doc = read_urn_file(out);
  EXPECT_EQ(doc.urn.colour_count(), 4u);
  ASSERT_TRUE(doc.factors);
  EXPECT_EQ(doc.urn, product(doc.factors->first, doc.factors->second));
}

TEST_F(Cli, ComposeUnionWithEmptyKeepsUrn) {
  const Result r = run_cli("compose union " + data("classic.json") + " " + data("empty.json"));
  ASSERT_EQ(r.code, 0);
  const PolyaUrn u = urn_from_json(Json::parse(r.out));
  EXPECT_TRUE(strict_isomorphic(u, read_urn_file(data("classic.json")).urn));
}

TEST_F(Cli, MalformedRationalIsAnInputError) {
  const fs::path bad = dir_ / "bad.json";
  std::ofstream(bad) << R"({"colours":["a"],"activities":["1/0"],"initial":[1],"replacements":[[]]})";
  EXPECT_EQ(run_cli("report " + bad.string()).code, 2);
  EXPECT_EQ(run_cli("compose union " + bad.string() + " " + bad.string()).code, 2);
  EXPECT_EQ(run_cli("report " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run_cli("verify nonsense").code, 2);
}

TEST_F(Cli, ReportFriedmanClassicEmpty) {
  const Result f = run_cli("report " + data("friedman.json"));
  ASSERT_EQ(f.code, 0);
  const Json jf = Json::parse(f.out);
  EXPECT_NEAR(jf["assumptions"]["lambda1"].get<double>(), 1.0, 1e-9);
  for (int k = 1; k <= 6; ++k) EXPECT_TRUE(jf["assumptions"]["A" + std::to_string(k)]["holds"].get<bool>());
  EXPECT_TRUE(jf.contains("intensity") && jf.contains("spectrum") && jf.contains("classes"));

  const Json jc = Json::parse(run_cli("report " + data("classic.json")).out);
  EXPECT_FALSE(jc["assumptions"]["A4"]["holds"].get<bool>());

  const Json je = Json::parse(run_cli("report " + data("empty.json")).out);
  EXPECT_TRUE(je["intensity"].empty());
  EXPECT_TRUE(je["spectrum"].empty());

  const Result pretty = run_cli("report " + data("friedman.json") + " --pretty");
  EXPECT_EQ(pretty.code, 0);
  EXPECT_NE(pretty.out.find("dominating class"), std::string::npos);
}

TEST_F(Cli, SimulateIsDeterministicAndMatchesPrediction) {
  const std::string args = "simulate " + data("friedman_x_friedman.json") +
                           " --steps 200000 --replicas 4 --seed 3 --out ";
  ASSERT_EQ(run_cli(args + (dir_ / "a").string()).code, 0);
  ASSERT_EQ(run_cli(args + (dir_ / "b").string()).code, 0);
  for (const char* f : {"summary.json", "composition.csv", "replica_0.jsonl", "replica_3.jsonl"})
    EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
  const Json s = Json::parse(slurp(dir_ / "a" / "summary.json"));
  EXPECT_EQ(s["status"], "ok");
  EXPECT_LT(s["max_relative_error"].get<double>(), 0.02);
  for (const auto& x : s["predicted_limit"]) EXPECT_NEAR(x.get<double>(), 0.25, 1e-12);
  // Header line carries the reproducibility metadata.
  std::istringstream in(slurp(dir_ / "a" / "replica_0.jsonl"));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(Json::parse(header)["seed"], 3);
}

TEST_F(Cli, SimulateZeroStepsIsMarked) {
  ASSERT_EQ(run_cli("simulate " + data("classic.json") + " --steps 0 --out " + dir_.string()).code, 0);
  const Json s = Json::parse(slurp(dir_ / "summary.json"));
  EXPECT_EQ(s["status"], "ZeroSteps");
  EXPECT_TRUE(s["mean_composition"].is_null());
}

TEST_F(Cli, SeedFromEnvironment) {
  const std::string cmd = "simulate " + data("friedman.json") + " --steps 50 --out ";
  setenv("POLYA_SEED", "42", 1);
  const Result a = run_cli(cmd + (dir_ / "a").string());
  unsetenv("POLYA_SEED");
  const Result b = run_cli(cmd + (dir_ / "b").string() + " --seed 42");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(slurp(dir_ / "a" / "replica_0.jsonl"), slurp(dir_ / "b" / "replica_0.jsonl"));
  EXPECT_EQ(Json::parse(a.out)["seed"], 42);
}

TEST_F(Cli, VerifySuitesPass) {
  for (const char* suite : {"semiring --trials 100 --seed 7", "sigma --trials 50", "phi --trials 30",
                            "matrix-laws --trials 30", "graph", "assumptions --trials 20"}) {
    const Result r = run_cli(std::string("verify ") + suite);
    EXPECT_EQ(r.code, 0) << suite;
    EXPECT_TRUE(Json::parse(r.out)["pass"].get<bool>()) << suite;
  }
}

TEST_F(Cli, VerifyMutatedProductFailsWithCounterexample) {
  const Result r = run_cli("verify semiring --trials 100 --seed 7 --corrupt-product");
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["pass"].get<bool>());
  const Json& ce = j["laws"]["left_distributive"]["counterexample"];
  ASSERT_TRUE(ce.is_array());
  EXPECT_EQ(ce.size(), 3u);
  EXPECT_NO_THROW(urn_from_json(ce[0]));
}
