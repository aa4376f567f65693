// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <iostream>

#include "CLI11.hpp"
#include "suval_cli/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"suval acceptance suite"};
  suval::cli::AcceptanceConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads (0 = SUVAL_WORKERS, then all cores)");
  app.add_option("--criteria", cfg.only, "Only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  suval::cli::run_acceptance(cfg, [&](const suval::cli::CriterionResult& r) {
    std::cout << suval::cli::format_line(r) << std::endl;
    if (!r.pass) {
      ++failed;
      for (const auto& c : r.checks) {
        if (!c.pass) std::cout << "      failed check: " << c.name << std::endl;
      }
    }
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
