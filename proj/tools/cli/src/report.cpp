#include "suval_cli/report.hpp"

#include <fstream>

#include "suval/error.hpp"

namespace suval::cli {

namespace {

Json tagged(Json value, const char* provenance) {
  Json out = Json::object();
  out["value"] = std::move(value);
  out["provenance"] = provenance;
  return out;
}

}  // namespace

Json exact_value(double v) { return tagged(number(v), "exact"); }
Json exact_value(Complex z) { return tagged(complex_pair(z), "exact"); }
Json reference_value(double v) { return tagged(number(v), "reference"); }
Json reference_value(Complex z) { return tagged(complex_pair(z), "reference"); }

Json mc_value(Complex mean, double std_error) {
  Json out = tagged(complex_pair(mean), "mc");
  out["stderr"] = number(std_error);
  return out;
}

Json mc_value(double mean, double std_error) {
  Json out = tagged(number(mean), "mc");
  out["stderr"] = number(std_error);
  return out;
}

void Report::add(const Check& check) {
  Json c = Json::object();
  c["name"] = check.name;
  c["value"] = check.value;
  c["reference"] = check.reference;
  if (check.residual) c["residual"] = number(*check.residual);
  if (check.z_score) c["z_score"] = number(*check.z_score);
  c["pass"] = check.pass;
  if (!check.detail.is_null()) c["detail"] = check.detail;
  checks_.push_back(std::move(c));
  if (!check.pass) pass_ = false;
}

Json Report::to_json() const {
  Json out = Json::object();
  out["schema"] = kReportSchema;
  out["command"] = command_;
  out["config"] = config_;
  out["results"] = results_;
  out["checks"] = checks_;
  out["pass"] = pass_;
  out["timing"] = {{"seconds", seconds_}};
  return out;
}

void Report::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) suval::fail(ErrorCode::InvalidArgument, "cannot write report to '" + path + "'");
  out << to_json().dump(2) << '\n';
}

}  // namespace suval::cli
