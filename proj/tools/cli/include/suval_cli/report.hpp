#pragma once

#include <optional>
#include <string>

#include "suval/numkernel.hpp"
#include "suval_cli/io.hpp"

namespace suval::cli {

inline constexpr const char* kReportSchema = "suval.report/1";

/// A number tagged with where it came from: "exact", "mc" (with stderr) or
/// "reference".
Json exact_value(double v);
Json exact_value(Complex z);
Json mc_value(Complex mean, double std_error);
Json mc_value(double mean, double std_error);
Json reference_value(double v);
Json reference_value(Complex z);

struct Check {
  std::string name;
  Json value;
  Json reference;  // null when the check has no reference
  std::optional<double> residual;
  std::optional<double> z_score;
  bool pass = true;
  Json detail;  // free-form extras, may be null
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& config() { return config_; }
  Json& results() { return results_; }
  void add(const Check& check);
  void fail() { pass_ = false; }
  bool pass() const { return pass_; }
  void set_seconds(double s) { seconds_ = s; }

  /// Keys in a fixed order; only "timing" varies between identical runs.
  Json to_json() const;
  void write(const std::string& path) const;

 private:
  std::string command_;
  Json config_ = Json::object();
  Json results_ = Json::object();
  Json checks_ = Json::array();
  bool pass_ = true;
  double seconds_ = 0.0;
};

}  // namespace suval::cli
