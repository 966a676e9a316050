#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace tropic {
namespace {

namespace fs = std::filesystem;
using testing::run_cli;

const fs::path kFixtures = TROPIC_FIXTURE_DIR;

class Fixture : public ::testing::TestWithParam<std::string> {};

TEST_P(Fixture, ReproducesCommittedReport) {
  auto c = testing::load_fixture(kFixtures / GetParam());
  auto r = run_cli(c.args);
  EXPECT_EQ(r.exit_code, c.exit_code) << r.err;
  EXPECT_EQ(r.out, c.expected);
}

INSTANTIATE_TEST_SUITE_P(Committed, Fixture,
                         ::testing::Values("single_column", "two_by_two", "consistify", "family",
                                           "independence_pair", "three_column_reduction",
                                           "span_inside", "span_outside"));

class TempFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tropic_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

using Cli = TempFiles;

TEST_F(Cli, SolveExitCodes) {
  auto yes = write("yes.txt", "A: [0 2; 1 0]\nd: [3 2]\n");
  auto no = write("no.txt", "A: [0; 0]\nd: [1 2]\n");
  EXPECT_EQ(run_cli({"solve", "-p", yes}).exit_code, 0);
  auto r = run_cli({"solve", "-p", no});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("residual: 1/2"), std::string::npos);
}

TEST_F(Cli, SeparateMatrixAndVectorFiles) {
  auto a = write("a.mat", "0 2\n1 0\n");
  auto d = write("d.vec", "3 2\n");
  auto r = run_cli({"solve", "-A", a, "-d", d});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("principal: [1 1]"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  auto p = write("p.txt", "A: [1]\nd: [1]\n");
  EXPECT_EQ(run_cli({}).exit_code, 64);
  EXPECT_EQ(run_cli({"frobnicate"}).exit_code, 64);
  EXPECT_EQ(run_cli({"solve", "-p", p, "--format", "xml"}).exit_code, 64);
  EXPECT_EQ(run_cli({"solve", "-p", p, "--semifield", "boolean"}).exit_code, 64);
  EXPECT_EQ(run_cli({"solve"}).exit_code, 64);
  EXPECT_EQ(run_cli({"oracle", "-p", p, "--semifield", "minplus-float"}).exit_code, 64);
  EXPECT_EQ(run_cli({"--help"}).exit_code, 0);
}

TEST_F(Cli, DataErrors) {
  auto ragged = write("r.txt", "A: [1 2; 3]\nd: [1 2]\n");
  auto r = run_cli({"solve", "-p", ragged});
  EXPECT_EQ(r.exit_code, 65);
  EXPECT_NE(r.err.find("1:10"), std::string::npos) << r.err;
  auto mismatch = write("m.txt", "A: [1 2; 3 4]\nd: [1 2 3]\n");
  EXPECT_EQ(run_cli({"solve", "-p", mismatch}).exit_code, 65);
  auto unknown = write("u.txt", "boolean\nA: [1]\nd: [1]\n");
  EXPECT_EQ(run_cli({"solve", "-p", unknown}).exit_code, 65);
  auto zero_d = write("z.txt", "A: [1]\nd: [-inf]\n");
  EXPECT_EQ(run_cli({"residual", "-p", zero_d}).exit_code, 65);
  EXPECT_EQ(run_cli({"solve", "-p", (dir_ / "missing.txt").string()}).exit_code, 65);
}

TEST_F(Cli, SemifieldPrecedence) {
  auto p = write("p.txt", "minplus-float\nA: [0 +inf; +inf 0]\nd: [1 2]\n");
  auto r = run_cli({"solve", "-p", p});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("semifield: minplus-float"), std::string::npos);
  auto q = write("q.txt", "A: [0 1]\nd: [1]\n");
  EXPECT_NE(run_cli({"solve", "-p", q}).out.find("semifield: maxplus-rational"),
            std::string::npos);
  auto f = run_cli({"solve", "-p", q, "--semifield", "maxplus-float"});
  EXPECT_NE(f.out.find("semifield: maxplus-float"), std::string::npos);
}

TEST_F(Cli, ToleranceFlagAndEnvironment) {
  auto p = write("p.txt", "maxplus-float\nA: [0; 0]\nd: [1 1.000001]\n");
  EXPECT_EQ(run_cli({"solve", "-p", p}).exit_code, 1);
  EXPECT_EQ(run_cli({"solve", "-p", p, "--tol", "1e-5"}).exit_code, 0);
  ::setenv("TROPIC_TOLERANCE", "1e-5", 1);
  EXPECT_EQ(run_cli({"solve", "-p", p}).exit_code, 0);
  EXPECT_EQ(run_cli({"solve", "-p", p, "--tol", "1e-9"}).exit_code, 1);
  ::setenv("TROPIC_TOLERANCE", "lots", 1);
  EXPECT_EQ(run_cli({"solve", "-p", p}).exit_code, 64);
  ::unsetenv("TROPIC_TOLERANCE");
}

TEST_F(Cli, GeneralCap) {
  auto p = write("p.txt", "A: [0 0 0 0]\nd: [0]\n");
  EXPECT_EQ(run_cli({"general", "-p", p, "--max-cols", "3"}).exit_code, 64);
  auto r = run_cli({"general", "-p", p, "--max-cols", "3", "--allow-partial"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("family_size: 4"), std::string::npos);
}

TEST_F(Cli, JsonFormat) {
  auto a = write("a.mat", "0 0 -inf\n-inf 0 0\n");
  auto d = write("d.vec", "1 1\n");
  auto r = run_cli({"general", "-A", a, "-d", d, "--format", "json"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"index_set\": [\n        2\n      ]"), std::string::npos) << r.out;
}

TEST_F(Cli, OtherCommands) {
  auto p = write("p.txt", "A: [2 -inf; 1 3]\nd: [-inf 5]\n");
  auto r = run_cli({"residual", "-p", p});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("residual_is_one: true"), std::string::npos);
  auto s = run_cli({"distance", "-p", p});
  EXPECT_NE(s.out.find("minimizer: [-inf 2]"), std::string::npos);
  auto t = run_cli({"pseudo", "-p", p});
  EXPECT_NE(t.out.find("nearest_point: [-inf 5]"), std::string::npos);
  auto dup = write("dup.mat", "[0 0; 0 0]\n");
  EXPECT_EQ(run_cli({"independent", "-A", dup}).exit_code, 1);
}

TEST_F(Cli, OracleCommand) {
  auto r = run_cli({"oracle", "--seed", "5", "--rows", "3", "--cols", "3"});
  EXPECT_EQ(r.exit_code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("distance_agrees: true"), std::string::npos);
  EXPECT_NE(r.out.find("generators_agree: true"), std::string::npos);
  auto again = run_cli({"oracle", "--seed", "5", "--rows", "3", "--cols", "3"});
  EXPECT_EQ(r.out, again.out);
  EXPECT_EQ(run_cli({"oracle"}).exit_code, 64);
}

}  // namespace
}  // namespace tropic
