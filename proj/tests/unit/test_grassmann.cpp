#include <numbers>

#include "helpers.hpp"
#include "suval/kinematics.hpp"

using namespace suval;
using namespace suval::test;

namespace {
const double kHalfPi = std::numbers::pi / 2.0;
const Complex kI(0.0, 1.0);
}  // namespace

TEST(KaehlerAngles, Examples) {
  EXPECT_NEAR(kaehler_angles(span_real(2, {unit(4, 0), unit(4, 1)})).angles.at(0), 0.0, 1e-12);
  EXPECT_NEAR(kaehler_angles(span_real(2, {unit(4, 0), unit(4, 2)})).angles.at(0), kHalfPi, 1e-12);
  for (double t : {0.1, 0.7, 1.3}) EXPECT_NEAR(kaehler_angles(w_theta(t)).angles.at(0), t, 1e-12);
}

TEST(KaehlerAngles, WrongDimension) {
  EXPECT_SUVAL_ERROR(kaehler_angles(span_real(2, {unit(4, 0)})), ErrorCode::WrongDimension);
}

TEST(Theta, Examples) {
  const ThetaValue line = theta_invariant(span_real(2, {unit(4, 0), unit(4, 1)}));
  EXPECT_NEAR(std::abs(line.value), 0.0, 1e-12);
  EXPECT_FALSE(line.mod_sign);

  const ThetaValue lagr = theta_invariant(span_real(2, {unit(4, 0), unit(4, 2)}));
  EXPECT_NEAR(std::abs(lagr.value - 1.0), 0.0, 1e-12);
  EXPECT_TRUE(lagr.mod_sign);

  for (double t : {0.2, 0.9, 1.4}) {
    const ThetaValue th = theta_invariant(w_theta(t));
    EXPECT_FALSE(th.mod_sign);
    EXPECT_NEAR(std::abs(th.value - std::sin(t)), 0.0, 1e-12);
  }
}

TEST(Theta, ModulusIsProductOfSines) {
  Rng rng(21);
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 50; ++i) {
      const Subspace w = random_subspace(n, n, rng);
      double prod = 1.0;
      for (double a : kaehler_angles(w).angles) prod *= std::sin(a);
      EXPECT_NEAR(std::abs(theta_invariant(w).value), prod, 1e-9);
    }
  }
}

TEST(Theta, Equivariance) {
  Rng rng(22);
  for (int n : {2, 3}) {
    for (int i = 0; i < 50; ++i) {
      const Subspace w = random_subspace(n, n, rng);
      const CMatrix g = sample_unitary(n, rng);
      const ThetaValue t = theta_invariant(w);
      EXPECT_LE(theta_distance(theta_invariant(apply_unitary(g, w)), {g.determinant() * t.value, t.mod_sign}), 1e-9);
    }
  }
}

TEST(Theta, OrthogonalComplementEvenN) {
  Rng rng(23);
  for (int n : {2, 4}) {
    for (int i = 0; i < 50; ++i) {
      const Subspace w = random_subspace(n, n, rng);
      EXPECT_LE(theta_distance(theta_invariant(orthogonal_complement(w)), theta_invariant(w)), 1e-9);
    }
  }
}

TEST(Theta, OrthogonalComplementOddNPicksUpFactorI) {
  // R^3 has Theta 1 and its complement iR^3 has Theta i^3.
  const Subspace real3 = span_real(3, {unit(6, 0), unit(6, 2), unit(6, 4)});
  const ThetaValue t = theta_invariant(real3);
  const ThetaValue tp = theta_invariant(orthogonal_complement(real3));
  EXPECT_LE(theta_distance(tp, {kI * t.value, true}), 1e-12);
  EXPECT_GT(theta_distance(tp, t), 1.0);
}

TEST(ApplyUnitary, IdentityAndErrors) {
  const Subspace w = w_theta(0.4);
  EXPECT_TRUE(apply_unitary(CMatrix::Identity(2, 2), w).same_span(w));
  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 0) = 2.0;
  EXPECT_SUVAL_ERROR(apply_unitary(bad, w), ErrorCode::NotUnitary);
}

TEST(SameSuOrbit, Examples) {
  Rng rng(24);
  const Subspace w = w_theta(0.6);
  EXPECT_TRUE(same_su_orbit(w, apply_unitary(sample_special_unitary(2, rng), w)));
  EXPECT_FALSE(same_su_orbit(span_real(2, {unit(4, 0), unit(4, 2)}), span_real(2, {unit(4, 0), unit(4, 3)})));
  CMatrix g = CMatrix::Identity(2, 2);
  g(0, 0) = std::exp(kI * 0.8);
  EXPECT_FALSE(same_su_orbit(w, apply_unitary(g, w)));
  EXPECT_SUVAL_ERROR(same_su_orbit(w, random_subspace(3, 3, rng)), ErrorCode::DimensionMismatch);
}

TEST(OrbitRepresentative, Examples) {
  const Subspace lagr = orbit_representative({{kHalfPi}}, 1.0, 2);
  EXPECT_NEAR(kaehler_angles(lagr).angles[0], kHalfPi, 1e-12);
  EXPECT_LE(theta_distance(theta_invariant(lagr), {1.0, true}), 1e-12);
  const Subspace line = orbit_representative({{0.0}}, 0.0, 2);
  EXPECT_NEAR(kaehler_angles(line).angles[0], 0.0, 1e-12);
  EXPECT_SUVAL_ERROR(orbit_representative({{0.5}}, 1.0, 2), ErrorCode::InconsistentTheta);
}

TEST(OrbitRepresentative, RoundTrip) {
  Rng rng(25);
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 20; ++i) {
      const Subspace w = random_subspace(n, n, rng);
      const Subspace r = orbit_representative(kaehler_angles(w), theta_invariant(w).value, n);
      EXPECT_TRUE(same_su_orbit(w, r)) << "n=" << n;
    }
  }
}

TEST(OrthogonalComplement, IsInvolutive) {
  Rng rng(26);
  const Subspace w = random_subspace(3, 3, rng);
  EXPECT_TRUE(orthogonal_complement(orthogonal_complement(w)).same_span(w));
}

TEST(RandomSubspace, Deterministic) {
  Rng a(7), b(7);
  EXPECT_EQ(random_subspace(3, 3, a).basis(), random_subspace(3, 3, b).basis());
}
