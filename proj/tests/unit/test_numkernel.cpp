#include <numbers>

#include "helpers.hpp"
#include "suval/numkernel.hpp"
#include "suval/rng.hpp"

using namespace suval;
using namespace suval::test;

TEST(Orthonormalize, KeepsOrthonormalInput) {
  std::vector<RVector> in{unit(4, 0), unit(4, 1)};
  const auto out = orthonormalize(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_NEAR((out[0] - unit(4, 0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((out[1] - unit(4, 1)).norm(), 0.0, 1e-15);
}

TEST(Orthonormalize, Scales) {
  std::vector<RVector> in{vec({2, 0, 0, 0})};
  EXPECT_NEAR((orthonormalize(in)[0] - unit(4, 0)).norm(), 0.0, 1e-15);
}

TEST(Orthonormalize, RejectsDependentInput) {
  std::vector<RVector> in{unit(4, 0), unit(4, 0)};
  EXPECT_SUVAL_ERROR(orthonormalize(in), ErrorCode::RankDeficient);
}

TEST(Orthonormalize, RandomGramIsIdentity) {
  Rng rng(3);
  const RMatrix q = orthonormalize_columns(random_real(6, rng).leftCols(4));
  EXPECT_NEAR((q.transpose() * q - RMatrix::Identity(4, 4)).norm(), 0.0, 1e-13);
}

TEST(ComplexDet, Examples) {
  const CVector e1 = CVector::Unit(2, 0), e2 = CVector::Unit(2, 1);
  const Complex i(0, 1);
  std::vector<CVector> a{e1, e2}, b{e1, CVector(i * e2)}, c{e2, e1};
  EXPECT_NEAR(std::abs(complex_det(a) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(complex_det(b) - i), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(complex_det(c) + 1.0), 0.0, 1e-15);
}

TEST(ComplexDet, ShapeMismatch) {
  std::vector<CVector> cols{CVector::Unit(3, 0), CVector::Unit(3, 1)};
  EXPECT_SUVAL_ERROR(complex_det(cols), ErrorCode::ShapeMismatch);
}

TEST(SkewSpectrum, Examples) {
  EXPECT_EQ(skew_spectrum(RMatrix::Zero(2, 2)), std::vector<double>{0.0});
  RMatrix j(2, 2);
  j << 0, -1, 1, 0;
  EXPECT_NEAR(skew_spectrum(j)[0], 1.0, 1e-15);
  const double c = std::cos(0.7);
  j << 0, -c, c, 0;
  EXPECT_NEAR(skew_spectrum(j)[0], c, 1e-15);
}

TEST(SkewSpectrum, RejectsNonSkew) {
  EXPECT_SUVAL_ERROR(skew_spectrum(RMatrix::Identity(2, 2)), ErrorCode::NotSkew);
}

TEST(Pfaffian, Examples) {
  RMatrix a = RMatrix::Zero(4, 4);
  a(0, 1) = 2.0;
  a(1, 0) = -2.0;
  EXPECT_NEAR(pfaffian(a.topLeftCorner(2, 2)), 2.0, 1e-15);
  a(2, 3) = 3.0;
  a(3, 2) = -3.0;
  EXPECT_NEAR(pfaffian(a), 6.0, 1e-14);
}

TEST(Pfaffian, SquareIsDeterminant) {
  Rng rng(11);
  for (int d : {2, 4, 6}) {
    const RMatrix m = random_real(d, rng);
    const RMatrix a = m - m.transpose();
    const double p = pfaffian(a);
    EXPECT_NEAR(p * p, a.determinant(), 1e-10 * (1.0 + std::abs(a.determinant())));
  }
}

TEST(Pfaffian, Errors) {
  EXPECT_SUVAL_ERROR(pfaffian(RMatrix::Zero(3, 3)), ErrorCode::OddDimension);
  EXPECT_SUVAL_ERROR(pfaffian(RMatrix::Identity(2, 2)), ErrorCode::NotSkew);
}

TEST(UnitBall, Volumes) {
  EXPECT_DOUBLE_EQ(unit_ball_volume(0), 1.0);
  EXPECT_NEAR(unit_ball_volume(2), std::numbers::pi, 1e-15);
  EXPECT_NEAR(unit_ball_volume(4), std::numbers::pi * std::numbers::pi / 2.0, 1e-14);
}

TEST(Realify, IsMultiplicative) {
  Rng rng(5);
  CMatrix a(3, 3), b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a(i, j) = {rng.normal(), rng.normal()};
      b(i, j) = {rng.normal(), rng.normal()};
    }
  EXPECT_NEAR((realify(a * b) - realify(a) * realify(b)).norm(), 0.0, 1e-12);
  const CVector z = a.col(0);
  EXPECT_NEAR((to_real(b * z) - realify(b) * to_real(z)).norm(), 0.0, 1e-12);
  EXPECT_NEAR((to_complex(to_real(z)) - z).norm(), 0.0, 0.0);
}

TEST(Realify, ComplexStructureIsMultiplicationByI) {
  const CMatrix i_id = Complex(0, 1) * CMatrix::Identity(2, 2);
  EXPECT_NEAR((realify(i_id) - complex_structure(2)).norm(), 0.0, 0.0);
  EXPECT_TRUE(is_orthogonal(complex_structure(3)));
}
