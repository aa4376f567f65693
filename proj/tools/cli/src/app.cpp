#include "suval_cli/app.hpp"

#include <chrono>
#include <cmath>
#include <iostream>

#include "CLI11.hpp"
#include "suval/error.hpp"
#include "suval/grassmann.hpp"
#include "suval/invariant_forms.hpp"
#include "suval/kinematics.hpp"
#include "suval/valuations.hpp"
#include "suval_cli/acceptance.hpp"
#include "suval_cli/report.hpp"

namespace suval::cli {

namespace {

enum : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

struct Inputs {
  std::string subspace, a, b, valuation, polytope, k_body, l_body, mu = "phi2";
  int translations = 100;
  std::vector<int> criteria;
};

Json config_json(const RunConfig& cfg) {
  Json inputs = Json::array();
  for (const auto& s : cfg.inputs) inputs.push_back(s);
  return {{"command", cfg.command}, {"inputs", inputs}, {"n", cfg.n},           {"seed", cfg.seed},
          {"samples", cfg.samples}, {"tol", number(cfg.tol)}, {"workers", cfg.workers}};
}

int finish(Report& report, const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
  report.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  if (!cfg.json_path.empty()) report.write(cfg.json_path);
  return report.pass() ? kPass : kCheckFailed;
}

int infer_n(const RunConfig& cfg, int dimension) {
  if (dimension % 2 != 0) suval::fail(ErrorCode::OddDimension, "ambient dimension must be even");
  if (cfg.n != 0 && cfg.n * 2 != dimension) suval::fail(ErrorCode::DimensionMismatch, "--n does not match the input dimension");
  return dimension / 2;
}

// ------------------------------------------------------------- subcommands

int cmd_kahler(RunConfig& cfg, const Inputs& in, Report& report, std::ostream& out) {
  const Subspace w = subspace_from_json(read_json_file(in.subspace));
  cfg.n = w.n();
  const auto angles = kaehler_angles(w).angles;
  Json a = Json::array();
  for (double x : angles) a.push_back(exact_value(x));
  report.results()["angles"] = a;
  Json plain = Json::array();
  for (double x : angles) plain.push_back(number(x));
  out << Json{{"angles", plain}}.dump() << '\n';
  return kPass;
}

int cmd_theta(RunConfig& cfg, const Inputs& in, Report& report, std::ostream& out) {
  const Subspace w = subspace_from_json(read_json_file(in.subspace));
  cfg.n = w.n();
  const ThetaValue t = theta_invariant(w);
  report.results()["theta"] = exact_value(t.value);
  report.results()["mod_sign"] = t.mod_sign;
  Json j = Json::object();
  j["value"] = complex_pair({std::abs(t.value.real()) < 1e-15 ? 0.0 : t.value.real(),
                             std::abs(t.value.imag()) < 1e-15 ? 0.0 : t.value.imag()});
  j["mod_sign"] = t.mod_sign;
  out << j.dump() << '\n';
  return kPass;
}

int cmd_orbit_eq(RunConfig& cfg, const Inputs& in, Report& report, std::ostream& out) {
  const Subspace a = subspace_from_json(read_json_file(in.a));
  const Subspace b = subspace_from_json(read_json_file(in.b));
  cfg.n = a.n();
  const double tol = cfg.tol > 0.0 ? cfg.tol : kAngleTolerance;
  const bool same = same_su_orbit(a, b, tol);
  Check c;
  c.name = "same SU(n) orbit";
  c.value = exact_value(theta_distance(theta_invariant(a), theta_invariant(b)));
  c.pass = same;
  c.detail = {{"angles_a", kaehler_angles(a).angles}, {"angles_b", kaehler_angles(b).angles}};
  report.add(c);
  report.results()["same_orbit"] = same;
  out << Json{{"same_orbit", same}}.dump() << '\n';
  return same ? kPass : kCheckFailed;
}

int cmd_evaluate(RunConfig& cfg, const Inputs& in, Report& report, std::ostream& out) {
  const Polytope p = polytope_from_json(read_json_file(in.polytope));
  cfg.n = infer_n(cfg, p.ambient_dim());
  AngleOptions opts;
  opts.seed = cfg.seed;
  opts.workers = cfg.workers;
  if (cfg.samples > 0) opts.mc_samples = static_cast<int>(cfg.samples);
  const Valuation val = Valuation::parse(in.valuation, cfg.n);
  const Evaluation e = evaluate_detailed(val, p, opts);
  report.results()["valuation"] = val.name();
  report.results()["value"] = e.exact ? exact_value(e.value) : mc_value(e.value, e.std_error);
  Json j = {{"value_re", number(e.value.real())}, {"value_im", number(e.value.imag())}};
  if (!e.exact) j["stderr"] = number(e.std_error);
  out << j.dump() << '\n';
  return kPass;
}

int cmd_product(RunConfig& cfg, const Inputs& in, Report& report, std::ostream& out) {
  if (cfg.n == 0) suval::fail(ErrorCode::InvalidArgument, "product needs --n");
  const Valuation a = Valuation::parse(in.a, cfg.n);
  const Valuation b = Valuation::parse(in.b, cfg.n);
  const Complex c = product_middle(a.kind, b.kind, cfg.n);
  report.results()["product"] = exact_value(c);
  report.results()["basis"] = "vol";
  out << Json{{"value_re", number(c.real())}, {"value_im", number(c.imag())}}.dump() << '\n';
  return kPass;
}

int cmd_verify_forms(RunConfig& cfg, const Inputs&, Report& report, std::ostream& out) {
  if (cfg.n == 0) cfg.n = 2;
  const int samples = cfg.samples > 0 ? static_cast<int>(cfg.samples) : 100;
  const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;
  Rng rng(cfg.seed);
  std::vector<forms::NamedIdentity> all = forms::differential_identities(cfg.n);
  for (auto* family : {forms::chi_differential_identities, forms::chi_theta_relations, forms::volume_normalizations}) {
    for (auto& id : family(cfg.n)) all.push_back(std::move(id));
  }
  int failed = 0;
  for (const auto& id : all) {
    const auto rep = forms::check_identity_on_sphere_bundle(id.lhs, id.rhs, samples, tol, rng, cfg.workers);
    Check c;
    c.name = id.family + ": " + id.name;
    c.value = exact_value(rep.max_residual);
    c.reference = reference_value(tol);
    c.residual = rep.max_residual;
    c.pass = rep.pass;
    report.add(c);
    if (!rep.pass) ++failed;
    out << (rep.pass ? "pass  " : "FAIL  ") << c.name << "  max residual " << rep.max_residual << '\n';
  }
  std::vector<forms::RuminData> rumin{forms::phi2_rumin_data(cfg.n)};
  if (cfg.n % 2 == 0) rumin.push_back(forms::phi1_rumin_data(cfg.n));
  for (const auto& d : rumin) {
    const auto rep = forms::rumin_verify(d.omega, d.xi, d.d_expected, samples, tol, rng, cfg.workers);
    Check c;
    c.name = "Rumin: " + d.name;
    const double res = std::max(rep.identity_residual, rep.vertical_residual);
    c.value = exact_value(res);
    c.reference = reference_value(tol);
    c.residual = res;
    c.pass = rep.pass;
    report.add(c);
    if (!rep.pass) ++failed;
    out << (rep.pass ? "pass  " : "FAIL  ") << c.name << "  max residual " << res << '\n';
  }
  report.results()["failed"] = failed;
  return failed == 0 ? kPass : kCheckFailed;
}

Json estimate_json(const MCEstimate& e, bool pass) {
  Json j = Json::object();
  j["estimate"] = complex_pair(e.mean);
  j["stderr"] = number(e.std_error);
  j["reference"] = e.reference ? complex_pair(*e.reference) : Json(nullptr);
  j["z_score"] = e.z_score ? number(*e.z_score) : Json(nullptr);
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  j["pass"] = pass;
  return j;
}

int report_estimate(const std::string& name, const MCEstimate& e, Report& report, std::ostream& out) {
  Check c;
  c.name = name;
  c.value = mc_value(e.mean, e.std_error);
  c.reference = e.reference ? reference_value(*e.reference) : Json(nullptr);
  c.z_score = e.z_score;
  c.pass = !e.reference || e.within(3.0);
  report.add(c);
  report.results() = estimate_json(e, c.pass);
  out << report.results().dump() << '\n';
  return c.pass ? kPass : kCheckFailed;
}

int cmd_kinematic(RunConfig& cfg, const Inputs& in, Report& report, std::ostream& out, const std::string& kind) {
  const Json kj = read_json_file(in.k_body);
  const Json lj = read_json_file(in.l_body);
  if (kind == "reproduce") {
    const Polytope k = polytope_from_json(kj);
    const Polytope l = polytope_from_json(lj);
    cfg.n = infer_n(cfg, k.ambient_dim());
    ReproducingOptions opts;
    opts.translations = in.translations;
    const long long total = cfg.samples > 0 ? cfg.samples : 40000;
    opts.groups = static_cast<int>(std::max<long long>(2, total / opts.translations));
    opts.seed = cfg.seed;
    opts.workers = cfg.workers;
    const MCEstimate e = reproducing_check(Valuation::parse(in.mu, cfg.n), k, l, opts);
    return report_estimate("reproducing " + in.mu, e, report, out);
  }
  const Zonotope k = zonotope_from_json(kj);
  const Zonotope l = zonotope_from_json(lj);
  cfg.n = infer_n(cfg, k.ambient_dim());
  KinematicOptions opts;
  if (cfg.samples > 0) opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.workers = cfg.workers;
  const MCEstimate e = kind == "additive" ? additive_kinematic_delta(k, l, opts) : principal_kinematic_delta(k, l, opts);
  return report_estimate(kind + " kinematic delta", e, report, out);
}

int cmd_selftest(RunConfig& cfg, const Inputs& in, Report& report, std::ostream& out) {
  AcceptanceConfig acfg;
  acfg.seed = cfg.seed;
  acfg.workers = cfg.workers;
  acfg.only = in.criteria;
  const auto results = run_acceptance(acfg, [&](const CriterionResult& r) { out << format_line(r) << std::endl; });
  Json stats = Json::object();
  for (const auto& r : results) {
    for (Check c : r.checks) {
      c.name = "[" + std::to_string(r.id) + "] " + c.name;
      report.add(c);
    }
    if (!r.statistics.is_null()) stats[std::to_string(r.id)] = r.statistics;
  }
  report.results()["statistics"] = stats;
  report.results()["criteria"] = results.size();
  return report.pass() ? kPass : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"suval: SU(n)-invariant valuations, Kaehler angles and kinematic formulas"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  Inputs in;
  app.add_option("--n", cfg.n, "Complex dimension n (inferred from inputs when omitted)");
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Sample count (per-command default when omitted)");
  app.add_option("--tol", cfg.tol, "Tolerance (per-command default when omitted)");
  app.add_option("--json", cfg.json_path, "Write a JSON report to this path");
  app.add_option("--workers", cfg.workers, "Worker threads (default: SUVAL_WORKERS, then all cores)");

  auto* kahler = app.add_subcommand("kahler", "Kaehler angles of a real n-plane");
  kahler->add_option("--subspace", in.subspace, "Subspace JSON")->required();
  auto* theta = app.add_subcommand("theta", "Theta-invariant of a real n-plane");
  theta->add_option("--subspace", in.subspace, "Subspace JSON")->required();
  auto* orbit = app.add_subcommand("orbit-eq", "Whether two n-planes lie in one SU(n) orbit");
  orbit->add_option("--a", in.a, "First subspace JSON")->required();
  orbit->add_option("--b", in.b, "Second subspace JSON")->required();
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate a valuation on a polytope");
  evaluate_cmd->add_option("--valuation", in.valuation, "euler, vol, one_k, phi1, phi2, phi1_bar, phi2_bar")->required();
  evaluate_cmd->add_option("--polytope", in.polytope, "Polytope JSON")->required();
  auto* product = app.add_subcommand("product", "Alesker product of two middle-degree valuations, as a multiple of vol");
  product->add_option("--a", in.a, "phi1, phi2, phi1_bar or phi2_bar")->required();
  product->add_option("--b", in.b, "phi1, phi2, phi1_bar or phi2_bar")->required();
  auto* verify = app.add_subcommand("verify", "Symbolic verification");
  verify->require_subcommand(1);
  auto* verify_forms = verify->add_subcommand("forms", "Check the invariant-form identities on the sphere bundle");
  auto* kinematic = app.add_subcommand("kinematic", "Monte Carlo kinematic formulas");
  kinematic->require_subcommand(1);
  std::string kinematic_kind;
  for (const char* kind : {"additive", "principal", "reproduce"}) {
    auto* sub = kinematic->add_subcommand(kind, std::string(kind) + " kinematic check");
    sub->add_option("--K", in.k_body, "Body K (JSON)")->required();
    sub->add_option("--L", in.l_body, "Body L (JSON)")->required();
    if (std::string(kind) == "reproduce") {
      sub->add_option("--mu", in.mu, "Valuation to reproduce")->capture_default_str();
      sub->add_option("--translations", in.translations, "Translations per group draw")->capture_default_str();
    }
    sub->callback([&kinematic_kind, kind] { kinematic_kind = kind; });
  }
  app.add_subcommand("dims", "dim Val^{SU(n)} (prints the number)");
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--criteria", in.criteria, "Only these criteria (1-13)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "suval: " << e.what() << "\n" << "run 'suval --help' for usage\n";
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (sub == verify) cfg.command += " forms";
  if (sub == kinematic) cfg.command += " " + kinematic_kind;
  for (const auto* s : {&in.subspace, &in.a, &in.b, &in.valuation, &in.polytope, &in.k_body, &in.l_body}) {
    if (!s->empty()) cfg.inputs.push_back(*s);
  }

  const auto start = std::chrono::steady_clock::now();
  Report report(cfg.command);
  try {
    int code = kPass;
    if (sub == kahler) code = cmd_kahler(cfg, in, report, out);
    else if (sub == theta) code = cmd_theta(cfg, in, report, out);
    else if (sub == orbit) code = cmd_orbit_eq(cfg, in, report, out);
    else if (sub == evaluate_cmd) code = cmd_evaluate(cfg, in, report, out);
    else if (sub == product) code = cmd_product(cfg, in, report, out);
    else if (sub == verify && verify_forms->parsed()) code = cmd_verify_forms(cfg, in, report, out);
    else if (sub == kinematic) code = cmd_kinematic(cfg, in, report, out, kinematic_kind);
    else if (sub == selftest) code = cmd_selftest(cfg, in, report, out);
    else {
      if (cfg.n < 2) suval::fail(ErrorCode::InvalidArgument, "dims needs --n >= 2");
      report.results()["dimension_su"] = exact_value(static_cast<double>(dimension_su(cfg.n)));
      report.results()["dimension_u"] = exact_value(static_cast<double>(dimension_u(cfg.n)));
      out << dimension_su(cfg.n) << '\n';
    }
    report.config() = config_json(cfg);
    if (code != kPass) report.fail();
    const int written = finish(report, cfg, start);
    return code != kPass ? code : written;
  } catch (const suval::Error& e) {
    err << "suval: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "suval: " << e.what() << '\n';
    return kUsage;
  }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace suval::cli
