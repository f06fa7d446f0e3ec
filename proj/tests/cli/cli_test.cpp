#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

class Lab : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("dnls_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the tool with output under dir_/sub and returns its exit code.
  int run(const std::string& args, const std::string& sub = "out", const std::string& env = "") {
    const std::string cmd = env + " " + DNLS_LAB_BINARY + " -q -o " + (dir_ / sub).string() + " " + args + " > " +
                            (dir_ / "stdout.txt").string() + " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const fs::path& p) const {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
  }

  nlohmann::json report(const std::string& name, const std::string& sub = "out") const {
    return nlohmann::json::parse(read(dir_ / sub / name));
  }

  fs::path dir_;
};

std::vector<double> csv_column(const std::string& text, const std::string& column) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  std::vector<std::string> header;
  std::stringstream hs(line);
  for (std::string h; std::getline(hs, h, ',');) header.push_back(h);
  const auto idx = std::find(header.begin(), header.end(), column) - header.begin();
  std::vector<double> out;
  while (std::getline(is, line)) {
    std::stringstream ls(line);
    std::string cell;
    for (long i = 0; i <= idx; ++i) std::getline(ls, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_F(Lab, SolvePlaneWaveMatchesStationaryWave) {
  ASSERT_EQ(run("solve --equation dnls --plane-wave A=1,n=1 --T 0.1"), 0) << read(dir_ / "stderr.txt");
  const auto j = report("solve.json");
  EXPECT_EQ(j["tool"], "dnls-lab");
  EXPECT_TRUE(j.contains("version"));
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["config"]["plane-wave"], "A=1,n=1");
  EXPECT_EQ(j["report"]["status"], "CONVERGED");
  EXPECT_EQ(j["report"]["plane_wave"]["theta"], 0.0);
  EXPECT_LE(j["report"]["plane_wave"]["max_deviation"].get<double>(), 1e-6);
  const auto traj = read(dir_ / "out" / "solve_trajectory.csv");
  EXPECT_EQ(traj.rfind("{\"kind\":\"trajectory\"", 0), 0u);
  EXPECT_EQ(csv_column(read(dir_ / "out" / "solve_mass.csv"), "t").size(), 201u);
}

TEST_F(Lab, DivisorsRefinedMaximumIsTwo) {
  ASSERT_EQ(run("divisors --max 1000000 --refined"), 0);
  const auto refined = csv_column(read(dir_ / "out" / "divisors.csv"), "refined");
  ASSERT_EQ(refined.size(), 1000000u);
  EXPECT_EQ(*std::max_element(refined.begin(), refined.end()), 2.0);
  EXPECT_EQ(report("divisors.json")["report"]["summary"]["max_refined"], 2.0);
}

TEST_F(Lab, DivisorsWithoutRefinedColumn) {
  ASSERT_EQ(run("divisors --max 100"), 0);
  EXPECT_EQ(read(dir_ / "out" / "divisors.csv").substr(0, 27), "r,count,count_over_r_pow\n1,");
}

TEST_F(Lab, ReportsAreByteIdentical) {
  for (const char* sub : {"a", "b"}) {
    ASSERT_EQ(run("--seed 4 solve --random --N 16 --T 0.05", sub), 0);
    ASSERT_EQ(run("ratio-scan --samples 8 --N 3 --refine-budget 30 --seed 4", sub), 0);
    ASSERT_EQ(run("counterexample --n-list 100,1000 --probe-n 4,16 --time-samples 21", sub), 0);
    ASSERT_EQ(run("scan-sums --truncations 16,32 --a-min -4 --a-max 4 --anchor-min -2 --anchor-max 2", sub), 0);
  }
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir_ / "a")) {
    ++files;
    EXPECT_EQ(read(e.path()), read(dir_ / "b" / e.path().filename())) << e.path().filename();
  }
  EXPECT_GE(files, 10u);
}

TEST_F(Lab, SeedChangesRandomReports) {
  ASSERT_EQ(run("--seed 1 solve --random --N 8 --T 0.05", "a"), 0);
  ASSERT_EQ(run("--seed 2 solve --random --N 8 --T 0.05", "b"), 0);
  EXPECT_NE(read(dir_ / "a" / "solve_trajectory.csv"), read(dir_ / "b" / "solve_trajectory.csv"));
}

TEST_F(Lab, ConfigFileEqualsFlags) {
  std::ofstream(dir_ / "cfg.json") << R"({"seed": 3, "solve": {"N": 12, "T": 0.05, "random": true, "l2": 0.1}})";
  ASSERT_EQ(run("--config " + (dir_ / "cfg.json").string() + " solve", "a"), 0) << read(dir_ / "stderr.txt");
  ASSERT_EQ(run("--seed 3 solve --N 12 --T 0.05 --random --l2 0.1", "b"), 0);
  EXPECT_EQ(read(dir_ / "a" / "solve.json"), read(dir_ / "b" / "solve.json"));
  EXPECT_EQ(report("solve.json", "a")["config"]["N"], 12);
}

TEST_F(Lab, EnvironmentSetsOutputDirectory) {
  const auto target = dir_ / "from_env";
  const std::string cmd = "DNLS_LAB_OUTPUT_DIR=" + target.string() + " " + DNLS_LAB_BINARY +
                          " -q divisors --max 50 > /dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(target / "divisors.csv"));
}

TEST_F(Lab, InvalidConfigExitsOne) {
  EXPECT_EQ(run("solve --plane-wave A=1"), 1);
  EXPECT_NE(read(dir_ / "stderr.txt").find("plane wave needs both A and n"), std::string::npos);
  EXPECT_EQ(run("solve --plane-wave A=1,n=1 --N -4"), 1);
  EXPECT_EQ(run("solve --plane-wave A=1,n=1 --T 2"), 1);
  EXPECT_EQ(run("solve --plane-wave A=1,n=1 --random"), 1);
  EXPECT_EQ(run("ratio-scan --estimate trilinear --q 1.2"), 1);
  EXPECT_EQ(run("nonsense"), 1);
  std::ofstream(dir_ / "bad.json") << "{not json";
  EXPECT_EQ(run("--config " + (dir_ / "bad.json").string() + " divisors --max 10"), 1);
}

TEST_F(Lab, NonConvergenceExitsThree) {
  EXPECT_EQ(run("solve --plane-wave A=3,n=3 --N 16 --T 1"), 3);
  EXPECT_NE(read(dir_ / "stderr.txt").find("halving --T"), std::string::npos);
  EXPECT_EQ(report("solve.json")["report"]["status"], "FAILED");
}

TEST_F(Lab, VerifyFailureExitsTwo) {
  EXPECT_EQ(run("verify --check endpoint_growth"), 0);
  EXPECT_EQ(report("verify.json")["report"]["checks"][0]["status"], "expected_failure");
  EXPECT_EQ(run("verify --check endpoint_growth --strict"), 2);
}

TEST_F(Lab, VerifyQuickAllPass) {
  ASSERT_EQ(run("verify --quick"), 0) << read(dir_ / "stderr.txt");
  const auto j = report("verify.json");
  EXPECT_EQ(j["report"]["all_passed"], true);
  EXPECT_EQ(j["report"]["checks"].size(), 12u);
}

TEST_F(Lab, GaugeRoundTripThroughFiles) {
  ASSERT_EQ(run("--seed 5 solve --random --N 8 --T 0.05 --M 20"), 0);
  const auto traj = (dir_ / "out" / "solve_trajectory.csv").string();
  ASSERT_EQ(run("gauge --input " + traj + " --target-cutoff 64"), 0) << read(dir_ / "stderr.txt");
  ASSERT_EQ(run("gauge --inverse --input " + (dir_ / "out" / "gauge_output.csv").string() +
                " --target-cutoff 8 --prefix back"), 0);
  EXPECT_EQ(report("back.json")["report"]["output_cutoff"], 8);
  ASSERT_EQ(run("norms --input " + traj + " --s 0.5 --b 0.4"), 0);
  const auto n1 = report("norms.json")["report"];
  ASSERT_EQ(run("norms --input " + (dir_ / "out" / "back_output.csv").string() + " --s 0.5 --b 0.4"), 0);
  const auto n2 = report("norms.json")["report"];
  EXPECT_NEAR(n1["xsb_norm"].get<double>(), n2["xsb_norm"].get<double>(), 1e-9);
  EXPECT_GT(n1["z_norm"].get<double>(), 0.0);
}

TEST_F(Lab, NormsOfField) {
  std::ofstream(dir_ / "f.csv") << "{\"kind\":\"field\",\"cutoff\":2}\nxi,re,im\n-2,0,0\n-1,0,0\n0,0,0\n1,3,4\n2,0,0\n";
  ASSERT_EQ(run("norms --input " + (dir_ / "f.csv").string() + " --s 0 --r 2"), 0) << read(dir_ / "stderr.txt");
  EXPECT_NEAR(report("norms.json")["report"]["h_norm"].get<double>(), 5.0, 1e-14);
}

TEST_F(Lab, CounterexampleOutputs) {
  ASSERT_EQ(run("counterexample --n-list 1000,10000 --probe-n 4,16 --time-samples 21"), 0);
  const auto j = report("counterexample.json")["report"];
  EXPECT_GT(j["divergence"]["summary"]["fit_r_squared"].get<double>(), 0.99);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "counterexample_uniform_continuity.csv"));
}

TEST_F(Lab, RatioScanMarksEvidence) {
  ASSERT_EQ(run("ratio-scan --estimate strichartz --samples 5 --N 3 --refine-budget 20"), 0);
  const auto j = report("ratio_scan_strichartz.json")["report"];
  EXPECT_NE(j["caveat"].get<std::string>().find("EVIDENCE"), std::string::npos);
  EXPECT_GT(j["summary"]["max_ratio"].get<double>(), 0.0);
}
