#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace tropic::testing {

/// A committed CLI case: `args` (paths relative to the case directory),
/// the expected exit code and the expected text report.
struct FixtureCase {
  std::string name;
  std::filesystem::path dir;
  std::vector<std::string> args;
  int exit_code = 0;
  std::string expected;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FixtureCase load_fixture(const std::filesystem::path& dir) {
  FixtureCase c;
  c.name = dir.filename().string();
  c.dir = dir;
  std::istringstream words(slurp(dir / "args"));
  std::string w;
  while (words >> w) {
    if (std::filesystem::exists(dir / w)) w = (dir / w).string();
    c.args.push_back(w);
  }
  c.exit_code = std::stoi(slurp(dir / "exit_code"));
  c.expected = slurp(dir / "expected.txt");
  return c;
}

struct FixtureRun {
  int exit_code;
  std::string out;
  std::string err;
};

inline FixtureRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace tropic::testing
