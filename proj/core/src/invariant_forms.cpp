#include "suval/invariant_forms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>

#include "suval/error.hpp"
#include "suval/parallel.hpp"

namespace suval::forms {

namespace {

GaussRational I() { return GaussRational::i(); }
GaussRational half() { return GaussRational(Rational(1, 2)); }
GaussRational half_i() { return GaussRational(Rational(0), Rational(1, 2)); }

long long factorial(int k) {
  long long f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

long long binomial(int m, int j) {
  if (j < 0 || j > m) return 0;
  return factorial(m) / (factorial(j) * factorial(m - j));
}

// Sum over j of a(j) ^ b(j).
template <typename A, typename B>
PolyForm sum_wedge(int n, int degree, A a, B b) {
  PolyForm out(n, degree);
  for (int j = 0; j < n; ++j) out += wedge(a(j), b(j));
  return out;
}

PolyForm make_alpha(int n) {
  // 1/2 sum (zeta_j dzbar_j + zetabar_j dz_j)
  PolyForm f(n, 1);
  for (int j = 0; j < n; ++j) f += wedge(zeta(n, j), dz_bar(n, j)) + wedge(zeta_bar(n, j), dz(n, j));
  return half() * f;
}

PolyForm make_beta(int n) {
  PolyForm f(n, 1);
  for (int j = 0; j < n; ++j) f += wedge(zeta(n, j), dz_bar(n, j)) - wedge(zeta_bar(n, j), dz(n, j));
  return half_i() * f;
}

PolyForm make_gamma(int n) {
  PolyForm f(n, 1);
  for (int j = 0; j < n; ++j) f += wedge(zeta(n, j), dzeta_bar(n, j)) - wedge(zeta_bar(n, j), dzeta(n, j));
  return half_i() * f;
}

PolyForm make_theta0(int n) {
  return half_i() * sum_wedge(n, 2, [n](int j) { return dzeta(n, j); }, [n](int j) { return dzeta_bar(n, j); });
}

PolyForm make_theta2(int n) {
  return half_i() * sum_wedge(n, 2, [n](int j) { return dz(n, j); }, [n](int j) { return dz_bar(n, j); }) -
         wedge(make_alpha(n), make_beta(n));
}

int sign_of(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

PolyForm make_chi(int n, int k) {
  if (k < 0 || k > n - 1) fail(ErrorCode::BadIndex, "chi(k): k must lie in 0..n-1");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  PolyForm sum(n, n - 1);
  do {
    PolyForm term = zeta(n, perm[0]);
    for (int a = 1; a <= k; ++a) term = wedge(term, dz(n, perm[static_cast<std::size_t>(a)]));
    for (int a = k + 1; a < n; ++a) term = wedge(term, dzeta(n, perm[static_cast<std::size_t>(a)]));
    if (sign_of(perm) < 0) term *= GaussRational(-1);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return GaussRational(Rational(1, factorial(k) * factorial(n - k - 1))) * sum;
}

PolyForm make_dvol_space(int n) {
  PolyForm f = PolyForm::scalar(n, GaussRational(1));
  for (int v = 0; v < 2 * n; ++v) f = wedge(f, PolyForm::differential(n, v));
  return f;
}

PolyForm make_dvol_sphere(int n) {
  // Interior product of the outward radial field with dxi_1 ^ deta_1 ^ ... .
  PolyForm f(n, 2 * n - 1);
  for (int a = 0; a < 2 * n; ++a) {
    PolyForm term = PolyForm::coordinate(n, 2 * n + a);
    for (int b = 0; b < 2 * n; ++b) {
      if (b != a) term = wedge(term, PolyForm::differential(n, 2 * n + b));
    }
    if (a % 2 != 0) term *= GaussRational(-1);
    f += term;
  }
  return f;
}

}  // namespace

PolyForm theta_minus(int n) {
  const PolyForm g = make_gamma(n);
  PolyForm t = sum_wedge(n, 2, [n](int j) { return dz(n, j); }, [n](int j) { return dzeta_bar(n, j); });
  t -= wedge(make_beta(n), g);
  t += I() * wedge(make_alpha(n), g);
  return t;
}

PolyForm theta_plus(int n) { return theta_minus(n).conj(); }

PolyForm invariant_form(FormName name, int n, int k) {
  if (n < 1 || n > kMaxFormDim) fail(ErrorCode::UnsupportedDimension, "invariant_form: unsupported n");
  switch (name) {
    case FormName::alpha: return make_alpha(n);
    case FormName::beta: return make_beta(n);
    case FormName::gamma: return make_gamma(n);
    case FormName::theta0: return make_theta0(n);
    case FormName::theta1: return GaussRational(-1) * imag_part(theta_minus(n));
    case FormName::theta2: return make_theta2(n);
    case FormName::thetas: return real_part(theta_minus(n));
    case FormName::chi: return make_chi(n, k);
    case FormName::chibar: return make_chi(n, k).conj();
    case FormName::dvol_space: return make_dvol_space(n);
    case FormName::dvol_sphere: return make_dvol_sphere(n);
    case FormName::dvol_bundle: return wedge(make_dvol_space(n), make_dvol_sphere(n));
  }
  fail(ErrorCode::UnknownName, "invariant_form: unknown form");
}

FormSpec parse_form_name(std::string_view text) {
  static const std::pair<std::string_view, FormName> plain[] = {
      {"alpha", FormName::alpha},          {"beta", FormName::beta},
      {"gamma", FormName::gamma},          {"theta0", FormName::theta0},
      {"theta1", FormName::theta1},        {"theta2", FormName::theta2},
      {"thetas", FormName::thetas},        {"dvol_space", FormName::dvol_space},
      {"dvol_sphere", FormName::dvol_sphere}, {"dvol_bundle", FormName::dvol_bundle},
  };
  for (const auto& [label, name] : plain) {
    if (text == label) return {name, -1};
  }
  for (const auto& [prefix, name] : {std::pair{std::string_view("chibar"), FormName::chibar},
                                      std::pair{std::string_view("chi"), FormName::chi}}) {
    if (text.substr(0, prefix.size()) != prefix) continue;
    auto rest = text.substr(prefix.size());
    if (rest.size() >= 3 && rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
      if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(c); })) {
        return {name, std::stoi(std::string(rest))};
      }
    }
  }
  fail(ErrorCode::UnknownName, "unknown form name '" + std::string(text) + "'");
}

std::string form_label(const FormSpec& spec) {
  switch (spec.name) {
    case FormName::alpha: return "alpha";
    case FormName::beta: return "beta";
    case FormName::gamma: return "gamma";
    case FormName::theta0: return "theta0";
    case FormName::theta1: return "theta1";
    case FormName::theta2: return "theta2";
    case FormName::thetas: return "thetas";
    case FormName::chi: return "chi(" + std::to_string(spec.k) + ")";
    case FormName::chibar: return "chibar(" + std::to_string(spec.k) + ")";
    case FormName::dvol_space: return "dvol_space";
    case FormName::dvol_sphere: return "dvol_sphere";
    case FormName::dvol_bundle: return "dvol_bundle";
  }
  return "?";
}

PolyForm invariant_form(std::string_view name, int n) {
  const auto spec = parse_form_name(name);
  return invariant_form(spec.name, n, spec.k);
}

PolyForm chi_or_zero(int n, int k) {
  if (k < 0 || k > n - 1) return PolyForm::zero(n, n - 1);
  return make_chi(n, k);
}

std::vector<NamedIdentity> differential_identities(int n) {
  const PolyForm a = make_alpha(n);
  const PolyForm b = make_beta(n);
  const PolyForm g = make_gamma(n);
  const PolyForm t0 = make_theta0(n);
  const PolyForm t1 = invariant_form(FormName::theta1, n);
  const PolyForm t2 = make_theta2(n);
  const PolyForm ts = invariant_form(FormName::thetas, n);
  const GaussRational two(2);
  std::vector<NamedIdentity> out;
  out.push_back({"differentials", "d alpha = -beta^gamma - theta_s", ext_d(a), -wedge(b, g) - ts});
  out.push_back({"differentials", "d beta = alpha^gamma + theta_1", ext_d(b), wedge(a, g) + t1});
  out.push_back({"differentials", "d gamma = 2 theta_0", ext_d(g), two * t0});
  out.push_back({"differentials", "d theta_0 = 0", ext_d(t0), PolyForm::zero(n, 3)});
  out.push_back({"differentials", "d theta_1 = 2 alpha^theta_0 + gamma^theta_s", ext_d(t1),
                 two * wedge(a, t0) + wedge(g, ts)});
  out.push_back({"differentials", "d theta_2 = alpha^theta_1 + beta^theta_s", ext_d(t2),
                 wedge(a, t1) + wedge(b, ts)});
  out.push_back({"differentials", "d theta_s = 2 beta^theta_0 - gamma^theta_1", ext_d(ts),
                 two * wedge(b, t0) - wedge(g, t1)});
  return out;
}

std::vector<NamedIdentity> chi_differential_identities(int n) {
  const PolyForm a = make_alpha(n);
  const PolyForm b = make_beta(n);
  const PolyForm g = make_gamma(n);
  const PolyForm a_ib = a + I() * b;
  std::vector<NamedIdentity> out;
  for (int k = 0; k <= n - 1; ++k) {
    const PolyForm rhs = GaussRational(n - k) * (wedge(a_ib, chi_or_zero(n, k - 1)) + I() * wedge(g, make_chi(n, k)));
    out.push_back({"chi_differential", "d chi_" + std::to_string(k), ext_d(make_chi(n, k)), rhs});
  }
  return out;
}

std::vector<NamedIdentity> chi_theta_relations(int n) {
  const PolyForm t0 = make_theta0(n);
  const PolyForm t2 = make_theta2(n);
  const PolyForm tm = theta_minus(n);
  const PolyForm tp = theta_plus(n);
  const int top = 4 * n - 1;
  std::vector<NamedIdentity> out;
  std::vector<PolyForm> chis;
  for (int k = 0; k < n; ++k) chis.push_back(make_chi(n, k));
  for (int k = 1; k <= n - 1; ++k) {
    const auto ks = std::to_string(k);
    out.push_back({"chi_theta", "chi_" + ks + "^theta_0 = -(i/2) chi_" + std::to_string(k - 1) + "^(theta_s - i theta_1)",
                   wedge(chis[static_cast<std::size_t>(k)], t0),
                   GaussRational(Rational(0), Rational(-1, 2)) * wedge(chis[static_cast<std::size_t>(k - 1)], tm)});
    out.push_back({"chi_theta", "chi_" + std::to_string(k - 1) + "^theta_2 = (i/2) chi_" + ks + "^(theta_s + i theta_1)",
                   wedge(chis[static_cast<std::size_t>(k - 1)], t2),
                   half_i() * wedge(chis[static_cast<std::size_t>(k)], tp)});
  }
  for (int k = 0; k <= n - 1; ++k) {
    PolyForm minus_power = chis[static_cast<std::size_t>(k)];
    PolyForm plus_power = chis[static_cast<std::size_t>(k)];
    for (int l = 1; (n - 1) + 2 * l <= top; ++l) {
      minus_power = wedge(minus_power, tm);
      plus_power = wedge(plus_power, tp);
      const auto label = "_" + std::to_string(k) + "^(theta_s %c i theta_1)^" + std::to_string(l) + " = 0";
      if (k + l >= n) {
        std::string name = "chi" + label;
        name[name.find('%')] = '-';
        name.erase(name.find('c', name.find('-')), 1);
        out.push_back({"chi_theta", name, minus_power, PolyForm::zero(n, minus_power.degree())});
      }
      if (l > k) {
        std::string name = "chi" + label;
        name[name.find('%')] = '+';
        name.erase(name.find('c', name.find('+')), 1);
        out.push_back({"chi_theta", name, plus_power, PolyForm::zero(n, plus_power.degree())});
      }
    }
  }
  return out;
}

namespace {

// 2^{n-1} i^{n^2 - 1}
GaussRational power_two_i(int n) {
  GaussRational c(1LL << (n - 1));
  const int e = (n * n - 1) % 4;
  for (int j = 0; j < e; ++j) c *= I();
  return c;
}

}  // namespace

std::vector<NamedIdentity> volume_normalizations(int n) {
  const PolyForm a = make_alpha(n);
  const PolyForm b = make_beta(n);
  const PolyForm g = make_gamma(n);
  const PolyForm chi0 = make_chi(n, 0);
  const PolyForm chin = make_chi(n, n - 1);
  const PolyForm space = make_dvol_space(n);
  const PolyForm sphere = make_dvol_sphere(n);
  std::vector<NamedIdentity> out;
  out.push_back({"volume", "alpha^beta^theta_2^{n-1} = (n-1)! dvol(C^n)",
                 wedge(wedge(a, b), wedge_power(make_theta2(n), n - 1)), GaussRational(factorial(n - 1)) * space});
  out.push_back({"volume", "alpha^beta^chi_{n-1}^chibar_{n-1} = 2^{n-1} i^{n^2-1} dvol(C^n)",
                 wedge(wedge(a, b), wedge(chin, chin.conj())), power_two_i(n) * space});
  out.push_back({"volume", "gamma^chi_0^chibar_0 = 2^{n-1} i^{n^2-1} dvol(S^{2n-1})",
                 wedge(g, wedge(chi0, chi0.conj())), power_two_i(n) * sphere});
  if (n % 2 == 0) {
    // For even n the previous line reads i gamma^chi_0^chibar_0 = 2^{n-1} dvol.
    out.push_back({"volume", "i gamma^chi_0^chibar_0 = 2^{n-1} dvol(S^{2n-1})",
                   I() * wedge(g, wedge(chi0, chi0.conj())), GaussRational(1LL << (n - 1)) * sphere});
  }
  return out;
}

// --------------------------------------------------------------- Rumin data

RuminData phi2_rumin_data(int n) {
  if (n < 2) fail(ErrorCode::UnsupportedDimension, "phi2_rumin_data: n >= 2 required");
  const PolyForm a = make_alpha(n);
  const PolyForm chis = wedge(make_chi(n, 0), make_chi(n, n - 1));
  RuminData d{"phi2",
              wedge(make_beta(n), chis),
              GaussRational(Rational(0), Rational(-(n + 1))) * chis,
              GaussRational(-n * (n + 2)) * wedge(wedge(a, make_gamma(n)), chis),
              Complex(0.0, (n % 2 == 1 ? 1.0 : -1.0) / (n * unit_ball_volume(n)))};
  return d;
}

RuminData phi1_rumin_data(int n) {
  if (n % 2 != 0) fail(ErrorCode::OddN, "phi1_rumin_data: n must be even");
  const int m = n / 2;
  const PolyForm a = make_alpha(n);
  const PolyForm b = make_beta(n);
  const PolyForm g = make_gamma(n);
  const PolyForm t1 = invariant_form(FormName::theta1, n);
  const PolyForm t2 = make_theta2(n);
  const PolyForm ts = invariant_form(FormName::thetas, n);
  const PolyForm chi0 = make_chi(n, 0);
  // omega = (1/(n pi^m)) chi_0 ^ theta_2^m; the 1/pi^m lives in `scale`.
  const PolyForm omega = GaussRational(Rational(1, n)) * wedge(chi0, wedge_power(t2, m));
  // xi = 2 i^{m+1}/2^m gamma ^ chi_m ^ sum_{j odd} i^{m-j} C(m,j) theta_s^{j-1} theta_1^{m-j}
  //      + 1/2 beta ^ chi_0 ^ theta_2^{m-1}
  PolyForm series(n, 2 * (m - 1));
  for (int j = 1; j <= m; j += 2) {
    GaussRational c(binomial(m, j));
    for (int e = 0; e < m - j; ++e) c *= I();
    series += c * wedge(wedge_power(ts, j - 1), wedge_power(t1, m - j));
  }
  GaussRational lead(Rational(2, 1LL << m));
  for (int e = 0; e < m + 1; ++e) lead *= I();
  const PolyForm xi = lead * wedge(wedge(g, make_chi(n, m)), series) +
                      half() * wedge(wedge(b, chi0), wedge_power(t2, m - 1));
  const PolyForm inner = half() * wedge(wedge(chi0, t1), wedge_power(t2, m - 1)) - ext_d(xi);
  return RuminData{"phi1", omega, xi, wedge(a, inner), Complex(1.0 / std::pow(kPi, m), 0.0)};
}

RuminData conjugate(const RuminData& data) {
  return RuminData{data.name + "_bar", data.omega.conj(), data.xi.conj(), data.d_expected.conj(),
                   std::conj(data.scale)};
}

RuminReport rumin_verify(const PolyForm& omega, const PolyForm& xi, const PolyForm& d_expected, int samples,
                         double tol, Rng& rng, unsigned workers) {
  const int n = omega.n();
  if (omega.degree() != 2 * n - 1) fail(ErrorCode::DegreeMismatch, "rumin_verify: omega must have degree 2n-1");
  if (xi.degree() != 2 * n - 2 || d_expected.degree() != 2 * n) {
    fail(ErrorCode::DegreeMismatch, "rumin_verify: xi / D omega have inconsistent degrees");
  }
  const PolyForm d_omega = ext_d(omega + wedge(invariant_form(FormName::alpha, n), xi));
  const PolyForm diff = d_omega - d_expected;
  const Rng base = rng.split(0x7a1);
  rng = rng.split(0x7a2);
  struct Partial {
    double identity = 0.0;
    double vertical = 0.0;
  };
  constexpr std::size_t kChunks = 16;
  const auto parts = run_chunks<Partial>(kChunks, workers, [&](std::size_t chunk) {
    Partial part;
    for (int s = static_cast<int>(chunk); s < samples; s += static_cast<int>(kChunks)) {
      Rng local = base.split(static_cast<std::uint64_t>(s));
      const auto point = SpherePoint::random(n, local);
      const auto frame = random_tangent_frame(point, 2 * n, local);
      part.identity = std::max(part.identity, std::abs(eval_at(diff, point, frame)));
      const auto contact = random_contact_frame(point, 2 * n, local);
      part.vertical = std::max({part.vertical, std::abs(eval_at(d_omega, point, contact)),
                                std::abs(eval_at(d_expected, point, contact))});
    }
    return part;
  });
  RuminReport report;
  report.samples = samples;
  for (const auto& p : parts) {
    report.identity_residual = std::max(report.identity_residual, p.identity);
    report.vertical_residual = std::max(report.vertical_residual, p.vertical);
  }
  report.pass = report.identity_residual <= tol && report.vertical_residual <= tol;
  return report;
}

ProductConstant product_constant(const PolyForm& omega1, const PolyForm& d_omega2, Complex scale) {
  const int n = omega1.n();
  const PolyForm top = wedge(omega1, d_omega2);
  if (top.degree() != 4 * n - 1) fail(ErrorCode::DegreeMismatch, "product_constant: omega1 ^ D omega2 must have degree 4n-1");
  const PolyForm vol = invariant_form(FormName::dvol_bundle, n);
  Rng rng(0x5eed, static_cast<std::uint64_t>(n));
  constexpr int kPoints = 8;
  std::vector<Complex> ratios;
  for (int s = 0; s < kPoints; ++s) {
    const auto point = SpherePoint::random(n, rng);
    const auto frame = random_tangent_frame(point, 4 * n - 1, rng);
    const Complex denom = eval_at(vol, point, frame);
    ratios.push_back(scale * eval_at(top, point, frame) / denom);
  }
  ProductConstant out;
  out.c = ratios.front();
  for (const auto& r : ratios) out.spread = std::max(out.spread, std::abs(r - out.c));
  if (out.spread > 1e-9 * std::max(1.0, std::abs(out.c))) {
    fail(ErrorCode::NotProportional, "product_constant: omega1 ^ D omega2 is not a constant multiple of the volume form");
  }
  out.product = product_from_constant(out.c, n);
  return out;
}

Complex product_from_constant(Complex c, int n) {
  double f = 2.0 * std::pow(kPi, n);
  for (int j = 2; j <= n - 1; ++j) f /= j;
  return (n % 2 == 0 ? 1.0 : -1.0) * f * c;
}

}  // namespace suval::forms
