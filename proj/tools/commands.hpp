#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polyeig::cli {

enum ExitCode : int { ok = 0, failure = 1, parse_error = 2, no_bounds = 3, not_converged = 4 };

struct TropicalArgs {
  std::string file;
  std::string plot;
  bool json = false;
};

struct BoundsArgs {
  std::string file;
  bool q_class = false;
  bool json = false;
};

struct SolveArgs {
  std::string file;
  std::string init = "newton";
  std::optional<double> radius;
  double eps = 1e-13;
  double delta = 1e-14;
  int max_sweeps = 5000;
  std::string order = "sequential";
  bool json = false;
};

struct BenchArgs {
  std::string cls = "Q";
  long m = 5;
  std::vector<double> sigma;
  std::uint64_t seed = 1;
  std::vector<std::string> init = {"newton", "circle"};
  std::string order = "sequential";
  bool json = false;
};

struct OracleArgs {
  std::string file;
  bool reverse = false;
  bool json = false;
};

int cmd_tropical(const TropicalArgs& args, std::ostream& out);
int cmd_bounds(const BoundsArgs& args, std::ostream& out);
int cmd_solve(const SolveArgs& args, std::ostream& out);
int cmd_bench(const BenchArgs& args, std::ostream& out);
int cmd_oracle(const OracleArgs& args, std::ostream& out);

/// Parses the command line, dispatches and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyeig::cli
