#include "suval/valuations.hpp"

#include <cmath>

#include "suval/error.hpp"
#include "suval/invariant_forms.hpp"

namespace suval {

Valuation Valuation::make(ValuationKind kind, int n, int k) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "valuation: n >= 1 required");
  Valuation v;
  v.kind = kind;
  v.n = n;
  switch (kind) {
    case ValuationKind::euler: v.degree = 0; break;
    case ValuationKind::vol: v.degree = 2 * n; break;
    case ValuationKind::one_k:
      if (k < 0 || k > 2 * n) fail(ErrorCode::BadIndex, "one_k: k must lie in 0..2n");
      v.degree = k;
      break;
    case ValuationKind::phi1:
    case ValuationKind::phi1_bar:
      if (n % 2 != 0) fail(ErrorCode::OddN, "phi1 exists only for even n");
      v.degree = n;
      v.weight = kind == ValuationKind::phi1 ? 1 : -1;
      break;
    case ValuationKind::phi2:
    case ValuationKind::phi2_bar:
      v.degree = n;
      v.weight = kind == ValuationKind::phi2 ? 2 : -2;
      break;
  }
  return v;
}

Valuation Valuation::parse(std::string_view name, int n) {
  if (name == "euler" || name == "chi") return make(ValuationKind::euler, n);
  if (name == "vol") return make(ValuationKind::vol, n);
  if (name == "phi1") return make(ValuationKind::phi1, n);
  if (name == "phi2") return make(ValuationKind::phi2, n);
  if (name == "phi1_bar") return make(ValuationKind::phi1_bar, n);
  if (name == "phi2_bar") return make(ValuationKind::phi2_bar, n);
  if (name.substr(0, 4) == "one_" && name.size() > 4) {
    const auto digits = name.substr(4);
    if (digits.find_first_not_of("0123456789") == std::string_view::npos) {
      return make(ValuationKind::one_k, n, std::stoi(std::string(digits)));
    }
  }
  fail(ErrorCode::UnknownName, "unknown valuation '" + std::string(name) + "'");
}

std::string Valuation::name() const {
  switch (kind) {
    case ValuationKind::euler: return "euler";
    case ValuationKind::vol: return "vol";
    case ValuationKind::one_k: return "one_" + std::to_string(degree);
    case ValuationKind::phi1: return "phi1";
    case ValuationKind::phi2: return "phi2";
    case ValuationKind::phi1_bar: return "phi1_bar";
    case ValuationKind::phi2_bar: return "phi2_bar";
  }
  return "?";
}

Complex klain_phi2(const Subspace& w) {
  const auto t = theta_invariant(w);
  return t.value * t.value;
}

Complex klain_phi1(const Subspace& w) {
  if (w.n() % 2 != 0) fail(ErrorCode::OddN, "klain_phi1: n must be even");
  const auto angles = kaehler_angles(w);
  double prod = 1.0;
  for (double a : angles.angles) prod *= std::cos(a);
  if (std::abs(prod) <= kOrientationThreshold) return 0.0;
  return theta_invariant(w).value * prod;
}

Complex klain(const Valuation& val, const Subspace& w) {
  if (w.dim() != val.degree) fail(ErrorCode::WrongDimension, "klain: subspace dimension differs from the degree");
  Complex k = 1.0;
  switch (val.kind) {
    case ValuationKind::euler:
    case ValuationKind::vol:
    case ValuationKind::one_k: k = 1.0; break;
    case ValuationKind::phi1: k = klain_phi1(w); break;
    case ValuationKind::phi1_bar: k = std::conj(klain_phi1(w)); break;
    case ValuationKind::phi2: k = klain_phi2(w); break;
    case ValuationKind::phi2_bar: k = std::conj(klain_phi2(w)); break;
  }
  return val.scale * k;
}

Evaluation evaluate_detailed(const Valuation& val, const Polytope& p, const AngleOptions& options) {
  if (p.ambient_dim() != 2 * val.n) fail(ErrorCode::DimensionMismatch, "evaluate: polytope does not live in R^{2n}");
  Evaluation out;
  if (val.kind == ValuationKind::euler) {
    out.value = val.scale;
    return out;
  }
  if (val.kind == ValuationKind::vol) {
    out.value = val.scale * p.volume();
    return out;
  }
  double var = 0.0;
  for (const auto& f : p.faces(val.degree, options)) {
    Complex kl = val.scale;
    if (val.kind != ValuationKind::one_k) kl = klain(val, Subspace::from_spanning(val.n, f.basis));
    out.value += f.exterior_angle * f.volume * kl;
    if (!f.angle_exact) {
      out.exact = false;
      const double s = f.angle_stderr * f.volume * std::abs(kl);
      var += s * s;
    }
  }
  out.std_error = std::sqrt(var);
  return out;
}

Complex evaluate(const Valuation& val, const Polytope& p, const AngleOptions& options) {
  return evaluate_detailed(val, p, options).value;
}

bool check_weight(const Valuation& val, const Polytope& p, const CMatrix& g, double tol) {
  const Complex before = evaluate(val, p);
  const Complex after = evaluate(val, p.transformed(g, RVector::Zero(p.ambient_dim())));
  const Complex factor = std::pow(g.determinant(), val.weight);
  return std::abs(after - factor * before) <= tol * (1.0 + std::abs(before));
}

namespace {

forms::RuminData rumin_for(ValuationKind kind, int n) {
  switch (kind) {
    case ValuationKind::phi1: return forms::phi1_rumin_data(n);
    case ValuationKind::phi1_bar: return forms::conjugate(forms::phi1_rumin_data(n));
    case ValuationKind::phi2: return forms::phi2_rumin_data(n);
    case ValuationKind::phi2_bar: return forms::conjugate(forms::phi2_rumin_data(n));
    default: fail(ErrorCode::InvalidArgument, "product_middle: only phi1, phi2 and their conjugates are supported");
  }
}

}  // namespace

Complex product_middle(ValuationKind val1, ValuationKind val2, int n) {
  if (n < 2 || n > forms::kMaxFormDim) fail(ErrorCode::UnsupportedDimension, "product_middle: 2 <= n <= 4");
  const Valuation a = Valuation::make(val1, n);
  const Valuation b = Valuation::make(val2, n);
  if (a.degree != n || b.degree != n || a.weight == 0 || b.weight == 0) {
    fail(ErrorCode::InvalidArgument, "product_middle: only phi1, phi2 and their conjugates are supported");
  }
  if (a.weight + b.weight != 0) return 0.0;
  const auto d1 = rumin_for(val1, n);
  const auto d2 = rumin_for(val2, n);
  return forms::product_constant(d1.omega, d2.d_expected, d1.scale * d2.scale).product;
}

int dimension_u(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dimension_u: n >= 2");
  return (n + 2) * (n + 1) / 2;
}

int dimension_su(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dimension_su: n >= 2");
  return n % 2 == 0 ? (n * n + 3 * n + 10) / 2 : (n * n + 3 * n + 6) / 2;
}

}  // namespace suval
