#include "suval_cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <numbers>

#include "suval/error.hpp"
#include "suval/grassmann.hpp"
#include "suval/invariant_forms.hpp"
#include "suval/kinematics.hpp"
#include "suval/polytope.hpp"
#include "suval/valuations.hpp"
#include "suval_cli/oracle.hpp"

namespace suval::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string format(const char* fmt, ...) {
  char buf[2048];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Check bound_check(std::string name, double worst, double tol) {
  Check c;
  c.name = std::move(name);
  c.value = exact_value(worst);
  c.reference = reference_value(tol);
  c.residual = worst;
  c.pass = worst <= tol;
  return c;
}

Check runtime_check(std::string name, double seconds, double limit) {
  Check c;
  c.name = std::move(name);
  c.value = {{"value", seconds}, {"provenance", "exact"}};
  c.reference = reference_value(limit);
  c.pass = seconds < limit;
  return c;
}

Check mc_check(std::string name, const MCEstimate& e, double max_rel_stderr) {
  Check c;
  c.name = std::move(name);
  c.value = mc_value(e.mean, e.std_error);
  const Complex ref = e.reference.value_or(0.0);
  c.reference = reference_value(ref);
  c.z_score = e.z_score.value_or(INFINITY);
  c.pass = e.within(3.0);
  if (max_rel_stderr > 0.0) c.pass = c.pass && e.std_error <= max_rel_stderr * std::abs(ref);
  c.detail = {{"samples", e.samples}, {"seed", e.seed}};
  return c;
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15ULL));
}

RVector random_vector(int d, Rng& rng) {
  RVector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.normal();
  return v;
}

std::vector<RVector> random_basis(int d, Rng& rng) {
  for (;;) {
    std::vector<RVector> gens;
    RMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
      gens.push_back(random_vector(d, rng));
      m.col(i) = gens.back();
    }
    if (std::abs(m.determinant()) > 0.1) return gens;
  }
}

std::vector<double> random_sides(Rng& rng, double lo, double hi) {
  std::vector<double> s(4);
  for (auto& x : s) x = rng.uniform(lo, hi);
  return s;
}

// ------------------------------------------------------------------ 1

void orbit_invariants(const AcceptanceConfig& cfg, CriterionResult& r) {
  const auto start = Clock::now();
  Json stats = Json::object();
  std::string summary;
  for (int n : {2, 3}) {
    Rng rng = Rng(derived_seed(cfg.seed, 100 + static_cast<std::uint64_t>(n)));
    double worst_abs = 0.0, worst_perp = 0.0, worst_equiv = 0.0, worst_perp_in = 0.0;
    const Complex i_n = std::pow(Complex(0.0, 1.0), n);
    int oriented = 0, exact_sign = 0;
    for (int i = 0; i < 1000; ++i) {
      const Subspace w = random_subspace(n, n, rng);
      const ThetaValue t = theta_invariant(w);
      double prod = 1.0;
      for (double a : kaehler_angles(w).angles) prod *= std::sin(a);
      worst_abs = std::max(worst_abs, std::abs(std::abs(t.value) - prod));

      const ThetaValue tp = theta_invariant(orthogonal_complement(w));
      worst_perp = std::max(worst_perp, theta_distance(t, tp));
      worst_perp_in = std::max(worst_perp_in, theta_distance(tp, ThetaValue{i_n * t.value, true}));
      if (!t.mod_sign && !tp.mod_sign) {
        ++oriented;
        if (std::abs(t.value - tp.value) <= 1e-9) ++exact_sign;
      }
      if (i < 200) {
        const CMatrix g = sample_unitary(n, rng);
        const ThetaValue tg = theta_invariant(apply_unitary(g, w));
        const ThetaValue expected{g.determinant() * t.value, t.mod_sign};
        worst_equiv = std::max(worst_equiv, theta_distance(tg, expected));
      }
    }
    r.checks.push_back(bound_check(format("n=%d |Theta| = prod sin", n), worst_abs, 1e-9));
    r.checks.push_back(bound_check(format("n=%d Theta(W_perp) = Theta(W)", n), worst_perp, 1e-9));
    r.checks.push_back(bound_check(format("n=%d Theta(gW) = det(g) Theta(W)", n), worst_equiv, 1e-9));
    stats[format("n=%d", n)] = {{"oriented_pairs", oriented},
                                {"exact_sign_agreement", exact_sign},
                                {"max_residual_perp_equals_i^n_theta_mod_sign", number(worst_perp_in)}};
    summary += format("n=%d max residuals %.1e/%.1e/%.1e, perp exact-sign %d/%d, Theta(W_perp) = i^n Theta(W) to %.1e; ",
                      n, worst_abs, worst_perp, worst_equiv, exact_sign, oriented, worst_perp_in);
  }
  r.statistics = stats;
  const double secs = seconds_since(start);
  r.checks.push_back(runtime_check("runtime", secs, 10.0));
  r.summary = summary + format("%.1f s", secs);
}

// ------------------------------------------------------------------ 2

void form_identities(const AcceptanceConfig& cfg, CriterionResult& r) {
  const auto start = Clock::now();
  std::string summary;
  int total = 0, passed = 0;
  double worst = 0.0;
  for (int n : {2, 3}) {
    Rng rng = Rng(derived_seed(cfg.seed, 200 + static_cast<std::uint64_t>(n)));
    std::vector<forms::NamedIdentity> all = forms::differential_identities(n);
    for (auto& id : forms::chi_differential_identities(n)) all.push_back(std::move(id));
    for (auto& id : forms::chi_theta_relations(n)) all.push_back(std::move(id));
    for (const auto& id : all) {
      const auto rep = forms::check_identity_on_sphere_bundle(id.lhs, id.rhs, 100, 1e-9, rng, cfg.workers);
      r.checks.push_back(bound_check(format("n=%d %s: %s", n, id.family.c_str(), id.name.c_str()), rep.max_residual, 1e-9));
      ++total;
      if (rep.pass) ++passed;
      worst = std::max(worst, rep.max_residual);
    }
  }
  const double secs = seconds_since(start);
  r.checks.push_back(runtime_check("runtime", secs, 60.0));
  r.summary = format("%d/%d identities, max residual %.1e, %.1f s", passed, total, worst, secs);
}

// ------------------------------------------------------------------ 3

void volume_normalizations(const AcceptanceConfig& cfg, CriterionResult& r) {
  int total = 0, passed = 0;
  double worst = 0.0;
  for (int n : {2, 3}) {
    Rng rng = Rng(derived_seed(cfg.seed, 300 + static_cast<std::uint64_t>(n)));
    for (const auto& id : forms::volume_normalizations(n)) {
      const auto rep = forms::check_identity_on_sphere_bundle(id.lhs, id.rhs, 100, 1e-9, rng, cfg.workers);
      r.checks.push_back(bound_check(format("n=%d %s", n, id.name.c_str()), rep.max_residual, 1e-9));
      ++total;
      if (rep.pass) ++passed;
      worst = std::max(worst, rep.max_residual);
    }
  }
  r.summary = format("%d/%d normalizations, max residual %.1e", passed, total, worst);
}

// ------------------------------------------------------------------ 4

void rumin_data(const AcceptanceConfig& cfg, CriterionResult& r) {
  struct Case {
    const char* label;
    int n;
    forms::RuminData data;
    double ratio;
  };
  auto phi2_ratio = [](int n) {
    const double w = unit_ball_volume(n);
    return (n + 2) * std::pow(4.0, n - 1) / (n * w * w);
  };
  const double pi = std::numbers::pi;
  std::vector<Case> cases;
  cases.push_back({"phi2", 2, forms::phi2_rumin_data(2), phi2_ratio(2)});
  cases.push_back({"phi2", 3, forms::phi2_rumin_data(3), phi2_ratio(3)});
  cases.push_back({"phi1", 2, forms::phi1_rumin_data(2), 2.0 / (pi * pi)});
  std::string summary;
  for (const auto& c : cases) {
    Rng rng = Rng(derived_seed(cfg.seed, 400 + static_cast<std::uint64_t>(c.n)));
    const auto rep = forms::rumin_verify(c.data.omega, c.data.xi, c.data.d_expected, 100, 1e-9, rng, cfg.workers);
    const double res = std::max(rep.identity_residual, rep.vertical_residual);
    r.checks.push_back(bound_check(format("n=%d %s: d(omega + alpha^xi) = D omega", c.n, c.label), res, 1e-9));

    const auto bar = forms::conjugate(c.data);
    const auto pc = forms::product_constant(bar.omega, c.data.d_expected, bar.scale * c.data.scale);
    Check ratio;
    ratio.name = format("n=%d %s: conj(omega)^D omega / dvol", c.n, c.label);
    ratio.value = exact_value(pc.c);
    ratio.reference = reference_value(c.ratio);
    ratio.residual = std::abs(pc.c - c.ratio) / c.ratio;
    ratio.pass = *ratio.residual <= 1e-9;
    r.checks.push_back(ratio);
    summary += format("%s(n=%d) residual %.1e ratio %.12g; ", c.label, c.n, res, pc.c.real());
  }
  r.summary = summary;
}

// ------------------------------------------------------------------ 5

void products(const AcceptanceConfig&, CriterionResult& r) {
  struct Case {
    const char* label;
    ValuationKind a, b;
    int n;
    Complex expected;
  };
  const Case cases[] = {
      {"conj(phi1).phi1, n=2", ValuationKind::phi1_bar, ValuationKind::phi1, 2, 4.0},
      {"conj(phi2).phi2, n=2", ValuationKind::phi2_bar, ValuationKind::phi2, 2, 16.0},
      {"conj(phi2).phi2, n=3", ValuationKind::phi2_bar, ValuationKind::phi2, 3, -15.0 * std::numbers::pi},
  };
  std::string summary;
  for (const auto& c : cases) {
    const Complex got = product_middle(c.a, c.b, c.n);
    Check k;
    k.name = c.label;
    k.value = exact_value(got);
    k.reference = reference_value(c.expected);
    k.residual = std::abs(got - c.expected) / std::abs(c.expected);
    k.pass = *k.residual <= 1e-8;
    r.checks.push_back(k);
    summary += format("%s = %.10g; ", c.label, got.real());
  }
  r.summary = summary;
}

// ------------------------------------------------------------------ 6

void polytope_engine(const AcceptanceConfig& cfg, CriterionResult& r) {
  Rng rng = Rng(derived_seed(cfg.seed, 600));
  double worst = 0.0;
  for (int b = 0; b < 50; ++b) {
    const auto sides = random_sides(rng, 0.5, 2.0);
    const Polytope p = Polytope::box(sides);
    for (int k = 0; k <= 4; ++k) {
      const Complex v = evaluate(Valuation::make(ValuationKind::one_k, 2, k), p);
      worst = std::max(worst, std::abs(v - oracle::elementary_symmetric(sides, k)));
    }
  }
  r.checks.push_back(bound_check("one_k(box) = e_k(sides), 50 boxes, k=0..4", worst, 1e-10));

  const std::vector<double> unit{1, 1, 1, 1};
  const Complex mu2 = evaluate(Valuation::make(ValuationKind::one_k, 2, 2), Polytope::box(unit));
  Check cube;
  cube.name = "one_2([0,1]^4) = 6";
  cube.value = exact_value(mu2);
  cube.reference = reference_value(6.0);
  cube.residual = std::abs(mu2 - 6.0);
  cube.pass = *cube.residual <= 1e-10;
  r.checks.push_back(cube);

  int within = 0;
  double worst_z = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto gens = random_basis(4, rng);
    const Polytope p = Polytope::parallelotope(random_vector(4, rng), gens);
    AngleOptions opts;
    opts.mc_samples = 20000;
    opts.seed = derived_seed(cfg.seed, 6000 + static_cast<std::uint64_t>(i));
    opts.workers = cfg.workers;
    double sum = 0.0, var = 0.0;
    for (const auto& f : p.faces(0, opts)) {
      sum += f.exterior_angle;
      var += f.angle_stderr * f.angle_stderr;
    }
    const double se = std::sqrt(var);
    const double z = se > 0.0 ? std::abs(sum - 1.0) / se : (std::abs(sum - 1.0) <= 1e-9 ? 0.0 : INFINITY);
    worst_z = std::max(worst_z, z);
    const bool ok = z <= 3.0;
    if (ok) ++within;
    Check c;
    c.name = format("parallelotope %d: sum of vertex exterior angles", i);
    c.value = mc_value(sum, se);
    c.reference = reference_value(1.0);
    c.z_score = z;
    c.pass = ok;
    r.checks.push_back(c);
  }
  r.summary = format("e_k max error %.1e, one_2(cube) = %.12g, angle sums within 3 sigma %d/50 (max z %.2f)", worst,
                     mu2.real(), within, worst_z);
}

// ------------------------------------------------------------------ 7

void phi2_closed_form(const AcceptanceConfig& cfg, CriterionResult& r) {
  Rng rng = Rng(derived_seed(cfg.seed, 700));
  const auto phi2 = Valuation::make(ValuationKind::phi2, 2);
  double worst_box = 0.0, worst_closed = 0.0, worst_par = 0.0;
  for (int b = 0; b < 100; ++b) {
    const auto sides = random_sides(rng, 0.5, 2.5);
    const Complex v = evaluate(phi2, Polytope::box(sides));
    const Complex o = oracle::phi2_box(sides);
    worst_box = std::max(worst_box, std::abs(v - o));
    worst_closed = std::max(worst_closed, std::abs(o - oracle::phi2_box_closed_form(sides)));
  }
  for (int i = 0; i < 20; ++i) {
    const auto gens = random_basis(4, rng);
    const Complex v = evaluate(phi2, Polytope::parallelotope(random_vector(4, rng), gens));
    const Complex o = oracle::phi2_parallelotope(gens);
    worst_par = std::max(worst_par, std::abs(v - o) / (1.0 + std::abs(o)));
  }
  r.checks.push_back(bound_check("phi2(box) vs face enumeration, 100 boxes", worst_box, 1e-9));
  r.checks.push_back(bound_check("face enumeration vs (a1-a2)(b1-b2)", worst_closed, 1e-9));
  r.checks.push_back(bound_check("phi2(parallelotope) vs face enumeration, 20 parallelotopes", worst_par, 1e-9));
  r.summary = format("max errors: box %.1e, closed form %.1e, parallelotopes %.1e", worst_box, worst_closed, worst_par);
}

// ------------------------------------------------------------------ 8

void weight_laws(const AcceptanceConfig& cfg, CriterionResult& r) {
  Rng rng = Rng(derived_seed(cfg.seed, 800));
  const Valuation vals[] = {Valuation::make(ValuationKind::phi2, 2), Valuation::make(ValuationKind::phi1, 2),
                            Valuation::make(ValuationKind::vol, 2)};
  int weight_ok[3] = {0, 0, 0};
  double worst_even = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto gens = random_basis(4, rng);
    const Polytope p = Polytope::parallelotope(random_vector(4, rng), gens);
    const CMatrix g = sample_unitary(2, rng);
    for (int v = 0; v < 3; ++v) {
      if (check_weight(vals[v], p, g, 1e-8)) ++weight_ok[v];
    }
    const Polytope neg = p.scaled(-1.0);
    for (int v = 0; v < 2; ++v) {
      const Complex a = evaluate(vals[v], p);
      worst_even = std::max(worst_even, std::abs(evaluate(vals[v], neg) - a) / (1.0 + std::abs(a)));
    }
  }
  for (int v = 0; v < 3; ++v) {
    Check c;
    c.name = format("%s weight %d, 100 random (g, P)", vals[v].name().c_str(), vals[v].weight);
    c.value = exact_value(static_cast<double>(weight_ok[v]));
    c.reference = reference_value(100.0);
    c.pass = weight_ok[v] == 100;
    r.checks.push_back(c);
  }
  r.checks.push_back(bound_check("phi_i(-P) = phi_i(P)", worst_even, 1e-8));
  r.summary = format("weights phi2 %d/100, phi1 %d/100, vol %d/100; evenness max rel error %.1e", weight_ok[0],
                     weight_ok[1], weight_ok[2], worst_even);
}

// ------------------------------------------------------------------ 9

const std::vector<double> kBox{2, 1, 2, 1};

void normalization_anchor(const AcceptanceConfig& cfg, CriterionResult& r) {
  const auto start = Clock::now();
  const Polytope k = Polytope::box(kBox);
  ReproducingOptions opts;
  opts.groups = 40;
  opts.translations = 1000;
  opts.seed = derived_seed(cfg.seed, 900);
  opts.workers = cfg.workers;
  MCEstimate e = reproducing_check(Valuation::make(ValuationKind::vol, 2), k, k, opts);
  const double vol = kBox[0] * kBox[1] * kBox[2] * kBox[3];
  e.set_reference(vol * vol);
  r.checks.push_back(mc_check("vol reproducing, K = L = box(2,1,2,1)", e, 0.005));
  const double secs = seconds_since(start);
  r.checks.push_back(runtime_check("runtime", secs, 60.0));
  r.summary = format("%.4f +- %.4f (ref %g, z %.2f, rel stderr %.3f%%), %.1f s", e.mean.real(), e.std_error, vol * vol,
                     e.z_score.value_or(0), 100 * e.std_error / (vol * vol), secs);
}

// ------------------------------------------------------------------ 10, 11

struct KinematicCase {
  std::string label;
  Zonotope k;
  double reference;
};

std::vector<KinematicCase> kinematic_cases() {
  const double s = 1.5;
  Zonotope square{RVector::Zero(4), {s * RVector::Unit(4, 0), s * RVector::Unit(4, 2)}};
  return {{"box(2,1,2,1)", Zonotope::box(kBox), 0.125}, {"flat square s=1.5", square, std::pow(s, 4) / 8.0}};
}

void kinematic_criterion(const AcceptanceConfig& cfg, CriterionResult& r, bool principal) {
  const auto start = Clock::now();
  std::string summary;
  std::uint64_t stream = principal ? 1100 : 1000;
  for (const auto& c : kinematic_cases()) {
    KinematicOptions opts;
    opts.samples = 1000000;
    opts.seed = derived_seed(cfg.seed, stream++);
    opts.workers = cfg.workers;
    MCEstimate e = principal ? principal_kinematic_delta(c.k, c.k, opts) : additive_kinematic_delta(c.k, c.k, opts);
    const Complex library_ref = e.reference.value_or(0.0);
    e.set_reference(c.reference);
    r.checks.push_back(mc_check(c.label + (principal ? " principal delta" : " additive delta"), e, 0.02));
    r.checks.push_back(bound_check(c.label + " kinematic correction vs closed-form reference",
                                   std::abs(library_ref - c.reference), 1e-12));
    summary += format("%s %.5f +- %.5f (ref %.5f, z %.2f); ", c.label.c_str(), e.mean.real(), e.std_error,
                      c.reference, e.z_score.value_or(0));
    if (!principal && c.label.starts_with("box")) {
      KinematicOptions uopts = opts;
      uopts.samples = 100000;
      const MCEstimate u = uncoupled_additive_delta(c.k, c.k, uopts);
      const double ratio = u.sample_variance / e.sample_variance;
      Check guard;
      guard.name = "variance reduction vs independent SU/U draws";
      guard.value = mc_value(ratio, 0.0);
      guard.reference = reference_value(10.0);
      guard.pass = ratio >= 10.0;
      r.checks.push_back(guard);
      summary += format("variance ratio %.0fx; ", ratio);
    }
  }
  const double secs = seconds_since(start);
  r.checks.push_back(runtime_check("runtime", secs, 300.0));
  r.summary = summary + format("%.1f s", secs);
}

// ------------------------------------------------------------------ 12

void reproducing_property(const AcceptanceConfig& cfg, CriterionResult& r) {
  const Polytope k = Polytope::box(kBox);
  ReproducingOptions opts;
  opts.groups = 400;
  opts.translations = 100;
  opts.seed = derived_seed(cfg.seed, 1200);
  opts.workers = cfg.workers;
  MCEstimate e = reproducing_check(Valuation::make(ValuationKind::phi2, 2), k, k, opts);
  const double vol = kBox[0] * kBox[1] * kBox[2] * kBox[3];
  const double phi2 = oracle::phi2_box_closed_form(kBox);
  e.set_reference(2.0 * phi2 * vol);
  r.checks.push_back(mc_check("phi2 reproducing, K = L = box(2,1,2,1)", e, 0.0));

  opts.seed = derived_seed(cfg.seed, 1201);
  MCEstimate d = kinematic_delta_by_intersection(Valuation::make(ValuationKind::one_k, 2, 2), k, k, opts);
  d.set_reference(0.0);
  Check dc = mc_check("one_2 SU - U delta", d, 0.0);
  dc.pass = d.std_error > 0.0 && std::abs(d.mean) <= 3.0 * d.std_error;
  r.checks.push_back(dc);
  r.summary = format("phi2: %.3f +- %.3f (ref %g, z %.2f); one_2 delta %.3f +- %.3f", e.mean.real(), e.std_error,
                     2.0 * phi2 * vol, e.z_score.value_or(0), d.mean.real(), d.std_error);
}

// ------------------------------------------------------------------ 13

void dimensions(const AcceptanceConfig&, CriterionResult& r) {
  auto exact_check = [&](std::string name, int got, int want) {
    Check c;
    c.name = std::move(name);
    c.value = exact_value(static_cast<double>(got));
    c.reference = reference_value(static_cast<double>(want));
    c.pass = got == want;
    r.checks.push_back(c);
  };
  exact_check("dimension_su(2)", dimension_su(2), 10);
  exact_check("dimension_su(3)", dimension_su(3), 12);
  std::string diffs;
  for (int n = 2; n <= 8; ++n) {
    const int diff = dimension_su(n) - dimension_u(n);
    exact_check(format("dimension_su(%d) - dimension_u(%d)", n, n), diff, n % 2 == 0 ? 4 : 2);
    diffs += format("%d", diff);
  }
  r.summary = format("su(2) = %d, su(3) = %d, differences n=2..8: %s", dimension_su(2), dimension_su(3), diffs.c_str());
}

}  // namespace

std::string criterion_title(int id) {
  static const char* titles[] = {"orbit invariants",
                                 "form identities",
                                 "volume-form normalizations",
                                 "Rumin data",
                                 "products",
                                 "polytope engine oracle",
                                 "phi2 closed form",
                                 "weight laws",
                                 "kinematic normalization anchor",
                                 "additive kinematic formula",
                                 "principal kinematic formula",
                                 "reproducing property",
                                 "dimension formulas"};
  if (id < 1 || id > kCriterionCount) suval::fail(ErrorCode::BadIndex, format("no acceptance criterion %d", id));
  return titles[id - 1];
}

CriterionResult run_criterion(int id, const AcceptanceConfig& config) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  const auto start = Clock::now();
  try {
    switch (id) {
      case 1: orbit_invariants(config, r); break;
      case 2: form_identities(config, r); break;
      case 3: volume_normalizations(config, r); break;
      case 4: rumin_data(config, r); break;
      case 5: products(config, r); break;
      case 6: polytope_engine(config, r); break;
      case 7: phi2_closed_form(config, r); break;
      case 8: weight_laws(config, r); break;
      case 9: normalization_anchor(config, r); break;
      case 10: kinematic_criterion(config, r, false); break;
      case 11: kinematic_criterion(config, r, true); break;
      case 12: reproducing_property(config, r); break;
      case 13: dimensions(config, r); break;
      default: break;
    }
    r.pass = !r.checks.empty() && std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  } catch (const std::exception& e) {
    Check c;
    c.name = "exception";
    c.pass = false;
    c.detail = e.what();
    r.checks.push_back(c);
    r.pass = false;
    r.summary = std::string("error: ") + e.what();
  }
  r.seconds = seconds_since(start);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), id) == config.only.end()) continue;
    out.push_back(run_criterion(id, config));
    if (on_done) on_done(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  return format("%s  [%2d] %s: ", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str()) + r.summary +
         format(" (%.1f s)", r.seconds);
}

}  // namespace suval::cli
