#pragma once

// The U(n)/SU(n)-invariant forms on the sphere bundle C^n x S^{2n-1}, the
// structure identities they satisfy, and the Rumin-differential data used to
// compute products of the middle-degree valuations phi_1 and phi_2.

#include <string>
#include <string_view>
#include <vector>

#include "suval/forms.hpp"

namespace suval::forms {

enum class FormName {
  alpha,
  beta,
  gamma,
  theta0,
  theta1,
  theta2,
  thetas,
  chi,
  chibar,
  dvol_space,
  dvol_sphere,
  dvol_bundle,
};

struct FormSpec {
  FormName name;
  int k = -1;  // index for chi / chibar
};

/// Parses "alpha", "theta2", "chi(1)", "chibar(0)", "dvol_sphere", ...
/// Throws UnknownName.
FormSpec parse_form_name(std::string_view text);
std::string form_label(const FormSpec& spec);

/// Coordinate expression of an invariant form. chi(k) / chibar(k) require
/// 0 <= k <= n-1 (BadIndex otherwise).
PolyForm invariant_form(FormName name, int n, int k = -1);
PolyForm invariant_form(std::string_view name, int n);

/// chi(k) with the convention chi_k = 0 for k outside 0..n-1; the zero form
/// has degree n-1.
PolyForm chi_or_zero(int n, int k);

/// theta_s - i theta_1 and its conjugate.
PolyForm theta_minus(int n);
PolyForm theta_plus(int n);

struct NamedIdentity {
  std::string family;
  std::string name;
  PolyForm lhs;
  PolyForm rhs;
};

/// The seven differentials of alpha, beta, gamma, theta_0, theta_1, theta_2,
/// theta_s.
std::vector<NamedIdentity> differential_identities(int n);
/// d chi_k = (n-k)((alpha + i beta) ^ chi_{k-1} + i gamma ^ chi_k), k = 0..n-1.
std::vector<NamedIdentity> chi_differential_identities(int n);
/// The four chi/theta relation families for every admissible (k, l) whose
/// degree does not exceed 4n-1.
std::vector<NamedIdentity> chi_theta_relations(int n);
/// Volume-form normalizations of the invariant forms.
std::vector<NamedIdentity> volume_normalizations(int n);

/// Representative form omega of a middle-degree valuation, the correction xi
/// with d(omega + alpha ^ xi) vertical, and the expected D omega. All three
/// are stored without the irrational prefactor `scale`.
struct RuminData {
  std::string name;
  PolyForm omega;
  PolyForm xi;
  PolyForm d_expected;
  Complex scale;
};

/// phi_2, any n >= 2.
RuminData phi2_rumin_data(int n);
/// phi_1, n even.
RuminData phi1_rumin_data(int n);
/// Representative data of the complex-conjugate valuation.
RuminData conjugate(const RuminData& data);

struct RuminReport {
  double identity_residual = 0.0;  // |d(omega + alpha ^ xi) - D_expected|
  double vertical_residual = 0.0;  // both sides on contact frames
  int samples = 0;
  bool pass = false;
};

RuminReport rumin_verify(const PolyForm& omega, const PolyForm& xi, const PolyForm& d_expected, int samples,
                         double tol, Rng& rng, unsigned workers = 0);

struct ProductConstant {
  Complex c;        // omega_1 ^ D omega_2 = c dvol of the sphere bundle
  Complex product;  // coefficient of vol in mu_1 . mu_2
  double spread = 0.0;  // max deviation of the pointwise ratio from c
};

/// Ratio of `scale * omega1 ^ d_omega2` to the sphere-bundle volume form,
/// evaluated on full tangent frames at several points; throws
/// NotProportional if the ratio is not constant to 1e-9 (relative).
ProductConstant product_constant(const PolyForm& omega1, const PolyForm& d_omega2, Complex scale = 1.0);

/// (-1)^n 2 pi^n / (n-1)! * c.
Complex product_from_constant(Complex c, int n);

}  // namespace suval::forms
