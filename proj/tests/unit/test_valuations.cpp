#include <numbers>

#include "helpers.hpp"
#include "suval/kinematics.hpp"
#include "suval/valuations.hpp"

using namespace suval;
using namespace suval::test;

namespace {

const Valuation kPhi1 = Valuation::make(ValuationKind::phi1, 2);
const Valuation kPhi2 = Valuation::make(ValuationKind::phi2, 2);
const Valuation kVol = Valuation::make(ValuationKind::vol, 2);

Polytope random_parallelotope(Rng& rng) {
  std::vector<RVector> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(vec({rng.normal(), rng.normal(), rng.normal(), rng.normal()}));
  return Polytope::parallelotope(vec({rng.normal(), rng.normal(), rng.normal(), rng.normal()}), gens);
}

Polytope square_in(const Subspace& w, double side) {
  std::vector<RVector> gens{side * w.basis().col(0), side * w.basis().col(1)};
  return Polytope::parallelotope(RVector::Zero(4), gens);
}

}  // namespace

TEST(Klain, Examples) {
  const Subspace line = span_real(2, {unit(4, 0), unit(4, 1)});
  const Subspace lagr = span_real(2, {unit(4, 0), unit(4, 2)});
  EXPECT_NEAR(std::abs(klain_phi2(line)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(klain_phi2(lagr) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(klain_phi2(w_theta(0.7)) - std::pow(std::sin(0.7), 2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(klain_phi1(lagr)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(klain_phi1(line)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(klain_phi1(w_theta(std::numbers::pi / 4)) - 0.5), 0.0, 1e-12);
}

TEST(Klain, Errors) {
  Rng rng(1);
  EXPECT_SUVAL_ERROR(klain_phi2(random_subspace(2, 1, rng)), ErrorCode::WrongDimension);
  EXPECT_SUVAL_ERROR(klain_phi1(random_subspace(3, 3, rng)), ErrorCode::OddN);
}

TEST(Evaluate, Examples) {
  EXPECT_NEAR(std::abs(evaluate(Valuation::make(ValuationKind::euler, 2), Polytope::standard_simplex(4)) - 1.0), 0.0,
              1e-12);
  const std::vector<double> unit4{1, 1, 1, 1};
  EXPECT_NEAR(std::abs(evaluate(Valuation::make(ValuationKind::one_k, 2, 2), Polytope::box(unit4)) - 6.0), 0.0, 1e-12);
  const std::vector<double> sides{2.5, 1.5, 0.5, 2.0};
  EXPECT_NEAR(std::abs(evaluate(kPhi2, Polytope::box(sides)) - (2.5 - 1.5) * (0.5 - 2.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(evaluate(kPhi1, Polytope::box(sides))), 0.0, 1e-12);
  const double s = 1.7;
  EXPECT_NEAR(std::abs(evaluate(kPhi2, square_in(span_real(2, {unit(4, 0), unit(4, 2)}), s)) - s * s), 0.0, 1e-12);
}

TEST(Evaluate, KlainRecoveryOnFlatSquares) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Subspace w = random_subspace(2, 2, rng);
    const double side = rng.uniform(0.5, 2.0);
    const Polytope sq = square_in(w, side);
    EXPECT_NEAR(std::abs(evaluate(kPhi2, sq) - side * side * klain_phi2(w)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(evaluate(kPhi1, sq) - side * side * klain_phi1(w)), 0.0, 1e-10);
  }
}

TEST(Evaluate, TranslationInvarianceHomogeneityParity) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Polytope p = random_parallelotope(rng);
    const RVector t = vec({rng.normal(), rng.normal(), rng.normal(), rng.normal()});
    for (const auto& val : {kPhi1, kPhi2, Valuation::make(ValuationKind::one_k, 2, 1)}) {
      const Complex v = evaluate(val, p);
      const double tol = 1e-9 * (1.0 + std::abs(v));
      EXPECT_NEAR(std::abs(evaluate(val, p.translated(t)) - v), 0.0, tol);
      EXPECT_NEAR(std::abs(evaluate(val, p.scaled(1.7)) - std::pow(1.7, val.degree) * v), 0.0, 10 * tol);
      EXPECT_NEAR(std::abs(evaluate(val, p.scaled(-1.0)) - v), 0.0, tol);
    }
  }
}

TEST(Evaluate, ConjugatesAreConjugate) {
  Rng rng(4);
  const Polytope p = random_parallelotope(rng);
  EXPECT_NEAR(std::abs(evaluate(Valuation::make(ValuationKind::phi2_bar, 2), p) - std::conj(evaluate(kPhi2, p))), 0.0,
              1e-12);
}

TEST(Weight, Laws) {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const Polytope p = random_parallelotope(rng);
    const CMatrix g = sample_unitary(2, rng);
    EXPECT_TRUE(check_weight(kPhi2, p, g, 1e-8));
    EXPECT_TRUE(check_weight(kPhi1, p, g, 1e-8));
    EXPECT_TRUE(check_weight(kVol, p, g, 1e-8));
    EXPECT_TRUE(check_weight(kPhi2, p, sample_special_unitary(2, rng), 1e-8));
  }
}

TEST(Weight, DiagIFlipsPhi2) {
  const std::vector<double> sides{2, 1, 2, 1};
  const Polytope box = Polytope::box(sides);
  CMatrix g = CMatrix::Identity(2, 2);
  g(0, 0) = Complex(0, 1);
  const Complex before = evaluate(kPhi2, box);
  const Complex after = evaluate(kPhi2, box.transformed(g, RVector::Zero(4)));
  EXPECT_NEAR(std::abs(after + before), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(before - 1.0), 0.0, 1e-12);
  EXPECT_TRUE(check_weight(kPhi2, box, g, 1e-8));
}

TEST(Valuation, ParseAndNames) {
  EXPECT_EQ(Valuation::parse("one_3", 2).degree, 3);
  EXPECT_EQ(Valuation::parse("chi", 2).kind, ValuationKind::euler);
  EXPECT_EQ(Valuation::parse("phi2_bar", 2).weight, -2);
  EXPECT_EQ(Valuation::parse("phi1", 2).name(), "phi1");
  EXPECT_SUVAL_ERROR(Valuation::parse("psi", 2), ErrorCode::UnknownName);
  EXPECT_SUVAL_ERROR(Valuation::make(ValuationKind::phi1, 3), ErrorCode::OddN);
}

TEST(Product, Middle) {
  EXPECT_NEAR(std::abs(product_middle(ValuationKind::phi1_bar, ValuationKind::phi1, 2) - 4.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(product_middle(ValuationKind::phi2_bar, ValuationKind::phi2, 2) - 16.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(product_middle(ValuationKind::phi2_bar, ValuationKind::phi2, 3) + 15.0 * std::numbers::pi), 0.0,
              1e-8);
  EXPECT_EQ(product_middle(ValuationKind::phi1, ValuationKind::phi2, 2), Complex(0.0));
  EXPECT_SUVAL_ERROR(product_middle(ValuationKind::phi1_bar, ValuationKind::phi1, 3), ErrorCode::OddN);
}

TEST(Dimensions, Formulas) {
  EXPECT_EQ(dimension_su(2), 10);
  EXPECT_EQ(dimension_su(3), 12);
  EXPECT_EQ(dimension_u(2), 6);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(dimension_su(n) - dimension_u(n), n % 2 == 0 ? 4 : 2);
}
