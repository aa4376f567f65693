#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace suval::cli {

/// Parsed command line. Zero workers means SUVAL_WORKERS, then all cores.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  int n = 0;  // 0 = infer from inputs
  std::uint64_t seed = 42;
  long long samples = 0;  // 0 = per-command default
  double tol = 0.0;       // 0 = per-command default
  std::string json_path;
  unsigned workers = 0;
};

/// Exit code 0 on pass, 1 on a failed check, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace suval::cli
