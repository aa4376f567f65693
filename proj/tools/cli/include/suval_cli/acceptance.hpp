#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "suval_cli/report.hpp"

namespace suval::cli {

inline constexpr int kCriterionCount = 13;

struct AcceptanceConfig {
  std::uint64_t seed = 42;
  unsigned workers = 0;
  std::vector<int> only;  // empty = all criteria
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  double seconds = 0.0;
  std::vector<Check> checks;
  Json statistics;  // reported, not asserted
};

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const AcceptanceConfig& config);
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_done = {});
/// "PASS  [ 7] title: summary (1.2 s)"
std::string format_line(const CriterionResult& result);

}  // namespace suval::cli
