#include <numbers>

#include "helpers.hpp"
#include "suval/invariant_forms.hpp"

using namespace suval;
using namespace suval::forms;

namespace {

SpherePoint base_point(int n) {
  SpherePoint p;
  p.z = CVector::Zero(n);
  p.zeta = CVector::Unit(n, 0);
  return p;
}

bool holds(const PolyForm& lhs, const PolyForm& rhs, int samples = 30, std::uint64_t seed = 1) {
  Rng rng(seed);
  return check_identity_on_sphere_bundle(lhs, rhs, samples, 1e-9, rng, 1).pass;
}

}  // namespace

TEST(GaussRational, Arithmetic) {
  const GaussRational a(Rational(1, 2), Rational(3));
  const GaussRational b = GaussRational::i();
  EXPECT_EQ(a * b, GaussRational(Rational(-3), Rational(1, 2)));
  EXPECT_EQ(a + a.conj(), GaussRational(1));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(PolyForm, WedgeIsGradedCommutative) {
  const int n = 2;
  const PolyForm a = dz(n, 0), b = dzeta_bar(n, 1);
  EXPECT_EQ(wedge(a, b), -wedge(b, a));
  EXPECT_TRUE(wedge(a, a).is_zero());
  const PolyForm two = wedge(dz(n, 0), dz_bar(n, 1));
  EXPECT_EQ(wedge(two, a), wedge(a, two));
}

TEST(PolyForm, DSquaredIsZero) {
  const int n = 2;
  for (const char* name : {"alpha", "beta", "gamma", "theta1", "chi(1)"}) {
    const PolyForm f = invariant_form(name, n);
    EXPECT_TRUE(ext_d(ext_d(f)).is_zero()) << name;
  }
}

TEST(PolyForm, Leibniz) {
  const int n = 2;
  const PolyForm a = invariant_form("beta", n);
  const PolyForm b = invariant_form("chi(0)", n);
  const PolyForm sign = a.degree() % 2 == 0 ? wedge(a, ext_d(b)) : -wedge(a, ext_d(b));
  EXPECT_EQ(ext_d(wedge(a, b)), wedge(ext_d(a), b) + sign);
}

TEST(PolyForm, ConjugationIsInvolutive) {
  const PolyForm chi = invariant_form("chi(1)", 3);
  EXPECT_EQ(chi.conj().conj(), chi);
  EXPECT_EQ(real_part(chi) + GaussRational::i() * imag_part(chi), chi);
}

TEST(Eval, AlphaAtBasePoint) {
  const int n = 2;
  const PolyForm alpha = invariant_form("alpha", n);
  std::vector<RVector> v{RVector::Unit(4 * n, 0)};
  EXPECT_NEAR(std::abs(eval_at(alpha, base_point(n), v) - 1.0), 0.0, 1e-15);
}

TEST(Eval, RepeatedVectorsGiveZero) {
  const PolyForm beta_gamma = wedge(invariant_form("beta", 2), invariant_form("gamma", 2));
  Rng rng(3);
  const SpherePoint p = SpherePoint::random(2, rng);
  const auto frame = random_tangent_frame(p, 1, rng);
  std::vector<RVector> v{frame[0], frame[0]};
  EXPECT_NEAR(std::abs(eval_at(beta_gamma, p, v)), 0.0, 1e-15);
}

TEST(Eval, ArityMismatch) {
  std::vector<RVector> v{RVector::Unit(8, 0), RVector::Unit(8, 1)};
  EXPECT_SUVAL_ERROR(eval_at(invariant_form("alpha", 2), base_point(2), v), ErrorCode::ArityMismatch);
}

TEST(InvariantForms, NamesAndErrors) {
  EXPECT_EQ(form_label(parse_form_name("chi(1)")), "chi(1)");
  EXPECT_EQ(parse_form_name("chibar(0)").name, FormName::chibar);
  EXPECT_SUVAL_ERROR(parse_form_name("omega"), ErrorCode::UnknownName);
  EXPECT_SUVAL_ERROR(invariant_form(FormName::chi, 2, 2), ErrorCode::BadIndex);
  EXPECT_SUVAL_ERROR(invariant_form(FormName::chi, 2, -1), ErrorCode::BadIndex);
  EXPECT_TRUE(chi_or_zero(2, 2).is_zero());
}

TEST(Identities, Examples) {
  const int n = 2;
  const PolyForm alpha = invariant_form("alpha", n);
  const PolyForm beta = invariant_form("beta", n);
  const PolyForm gamma = invariant_form("gamma", n);
  EXPECT_TRUE(holds(ext_d(alpha), -wedge(beta, gamma) - invariant_form("thetas", n)));

  const PolyForm lhs = wedge(invariant_form("chi(1)", n), invariant_form("theta0", n));
  const PolyForm rhs = GaussRational(Rational(0), Rational(-1, 2)) *
                       wedge(invariant_form("chi(0)", n), invariant_form("thetas", n) -
                                                              GaussRational::i() * invariant_form("theta1", n));
  EXPECT_TRUE(holds(lhs, rhs));

  Rng rng(4);
  const auto rep = check_identity_on_sphere_bundle(alpha, beta, 20, 1e-9, rng, 1);
  EXPECT_FALSE(rep.pass);
  EXPECT_GT(rep.max_residual, 0.1);
  EXPECT_SUVAL_ERROR(check_identity_on_sphere_bundle(alpha, invariant_form("theta0", n), 5, 1e-9, rng, 1),
                     ErrorCode::DegreeMismatch);
}

TEST(Identities, AllFamiliesAtN2) {
  for (const auto& family : {differential_identities(2), chi_differential_identities(2), chi_theta_relations(2),
                             volume_normalizations(2)}) {
    for (const auto& id : family) EXPECT_TRUE(holds(id.lhs, id.rhs, 10)) << id.family << ": " << id.name;
  }
}

TEST(Identities, ResultIndependentOfWorkers) {
  const auto ids = differential_identities(2);
  Rng a(9), b(9);
  const auto r1 = check_identity_on_sphere_bundle(ids[0].lhs, ids[0].rhs, 40, 1e-9, a, 1);
  const auto r3 = check_identity_on_sphere_bundle(ids[0].lhs, ids[0].rhs, 40, 1e-9, b, 3);
  EXPECT_EQ(r1.max_residual, r3.max_residual);
}

TEST(Rumin, ClosedFormNeedsNoCorrection) {
  const int n = 2;
  const PolyForm omega = wedge(wedge(invariant_form("gamma", n), invariant_form("chi(0)", n)),
                               invariant_form("chi(1)", n));
  Rng rng(5);
  const auto rep =
      rumin_verify(omega, PolyForm::zero(n, omega.degree() - 1), PolyForm::zero(n, omega.degree() + 1), 20, 1e-9, rng, 1);
  EXPECT_TRUE(rep.pass);
}

TEST(Rumin, MiddleDegreeData) {
  Rng rng(6);
  for (const auto& d : {phi2_rumin_data(2), phi2_rumin_data(3), phi1_rumin_data(2)}) {
    EXPECT_TRUE(rumin_verify(d.omega, d.xi, d.d_expected, 20, 1e-9, rng, 1).pass) << d.name;
  }
  EXPECT_SUVAL_ERROR(phi1_rumin_data(3), ErrorCode::OddN);
}

TEST(ProductConstant, KnownProducts) {
  const double pi = std::numbers::pi;
  auto product = [](const RuminData& d) {
    const RuminData bar = conjugate(d);
    return product_constant(bar.omega, d.d_expected, bar.scale * d.scale).product;
  };
  EXPECT_NEAR(std::abs(product(phi1_rumin_data(2)) - 4.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(product(phi2_rumin_data(2)) - 16.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(product(phi2_rumin_data(3)) + 15.0 * pi), 0.0, 1e-8);
}

TEST(ProductConstant, RejectsNonInvariantInput) {
  const int n = 2;
  const RuminData d = phi2_rumin_data(n);
  const PolyForm bar = conjugate(d).omega;
  // Multiplying by 1 + |z_1|^2 breaks translation invariance.
  const PolyForm skewed = bar + wedge(wedge(z(n, 0), z(n, 0).conj()), bar);
  EXPECT_SUVAL_ERROR(product_constant(skewed, d.d_expected), ErrorCode::NotProportional);
}
