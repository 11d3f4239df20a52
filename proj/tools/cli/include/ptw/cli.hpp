#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptw::cli {

// Runs one command line (without the program name). Writes JSON to out and
// diagnostics to err. Exit codes: 0 success, 1 malformed input, 2 violated
// mathematical precondition or failed check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GoldenCase {
  std::string name;               // file stem under the golden directory
  std::vector<std::string> args;  // "{fixtures}" is replaced by the fixture directory
  int exit_code = 0;
};

const std::vector<GoldenCase>& golden_cases();
std::vector<std::string> expand_golden_args(const GoldenCase& c, const std::string& fixture_dir);
// Output recorded for a golden case: the exit code line followed by stdout.
std::string golden_output(const GoldenCase& c, const std::string& fixture_dir);
// Rewrites every golden file; returns the number written.
int regenerate_golden(const std::string& fixture_dir, const std::string& golden_dir);

}  // namespace ptw::cli
