#include <algorithm>
#include <numbers>

#include "helpers.hpp"
#include "suval/kinematics.hpp"
#include "suval/valuations.hpp"

using namespace suval;
using namespace suval::test;

TEST(Haar, UnitaryAndDeterminant) {
  Rng rng(1);
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 20; ++i) {
      EXPECT_TRUE(is_unitary(sample_unitary(n, rng)));
      const CMatrix s = sample_special_unitary(n, rng);
      EXPECT_TRUE(is_unitary(s));
      EXPECT_NEAR(std::abs(s.determinant() - 1.0), 0.0, 1e-12);
    }
  }
}

TEST(Haar, CoupledPairShareAllButDeterminant) {
  Rng rng(2);
  const CoupledPair p = coupled_pair(3, rng);
  EXPECT_NEAR(std::abs(p.su.determinant() - 1.0), 0.0, 1e-12);
  EXPECT_NEAR((p.su.rightCols(2) - p.u.rightCols(2)).norm(), 0.0, 1e-12);
}

TEST(Haar, SecondMomentOfEntry) {
  for (int n : {2, 3}) {
    Rng rng(3);
    const int draws = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < draws; ++i) {
      const double x = std::norm(sample_unitary(n, rng)(0, 0));
      sum += x;
      sum2 += x * x;
    }
    const double mean = sum / draws;
    const double se = std::sqrt((sum2 / draws - mean * mean) / draws);
    EXPECT_LE(std::abs(mean - 1.0 / n), 3.0 * se) << "n=" << n;
  }
}

TEST(Haar, KolmogorovSmirnovOnEntryModulus) {
  // |g_11|^2 is Beta(1, n-1): CDF 1 - (1 - x)^{n-1}.
  const int n = 3, draws = 20000;
  Rng rng(4);
  std::vector<double> xs(draws);
  for (auto& x : xs) x = std::norm(sample_unitary(n, rng)(0, 0));
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double f = 1.0 - std::pow(1.0 - xs[static_cast<std::size_t>(i)], n - 1);
    d = std::max({d, std::abs(f - static_cast<double>(i) / draws), std::abs(f - static_cast<double>(i + 1) / draws)});
  }
  EXPECT_LT(d, 1.63 / std::sqrt(draws));  // 1% level
}

TEST(Haar, LeftInvariance) {
  // The law of |(g0 g)_11|^2 matches that of |g_11|^2.
  Rng rng(5);
  const CMatrix g0 = sample_unitary(2, rng);
  const int draws = 50000;
  double a = 0.0, b = 0.0;
  for (int i = 0; i < draws; ++i) {
    const CMatrix g = sample_unitary(2, rng);
    a += std::pow(std::norm(g(0, 0)), 2);
    b += std::pow(std::norm((g0 * g)(0, 0)), 2);
  }
  // E|g11|^4 = 1/3 for n = 2; per-sample sd about 0.3.
  EXPECT_NEAR(a / draws, 1.0 / 3.0, 4 * 0.3 / std::sqrt(draws));
  EXPECT_NEAR(b / draws, 1.0 / 3.0, 4 * 0.3 / std::sqrt(draws));
}

TEST(Coefficients, RenderingsAgree) {
  for (int n : {2, 3}) EXPECT_DOUBLE_EQ(phi2_kinematic_coefficient(n), phi2_kinematic_coefficient_by_parity(n));
  EXPECT_NEAR(phi2_kinematic_coefficient(2), 1.0 / 16.0, 1e-15);
  EXPECT_LT(phi2_kinematic_coefficient(3), 0.0);
  EXPECT_DOUBLE_EQ(phi1_kinematic_coefficient(2), 0.25);
  EXPECT_DOUBLE_EQ(phi1_kinematic_coefficient(3), 0.0);
}

TEST(Coefficients, CorrectionExamples) {
  const std::vector<double> box{2, 1, 2, 1}, cube{1, 1, 1, 1};
  const Polytope k = Polytope::box(box);
  EXPECT_NEAR(std::abs(kinematic_correction(k, k, 2) - 0.125), 0.0, 1e-12);
  const Polytope c = Polytope::box(cube);
  EXPECT_NEAR(std::abs(kinematic_correction(c, c, 2)), 0.0, 1e-12);
}

TEST(Additive, SmallRunAgreesAndIsWorkerIndependent) {
  const std::vector<double> box{2, 1, 2, 1};
  const Zonotope k = Zonotope::box(box);
  KinematicOptions opts;
  opts.samples = 20000;
  opts.seed = 7;
  opts.workers = 1;
  const MCEstimate one = additive_kinematic_delta(k, k, opts);
  opts.workers = 3;
  const MCEstimate three = additive_kinematic_delta(k, k, opts);
  EXPECT_EQ(one.mean, three.mean);
  EXPECT_EQ(one.std_error, three.std_error);
  EXPECT_TRUE(one.within(4.0)) << one.mean << " +- " << one.std_error;
  EXPECT_EQ(one.samples, 20000);
}

TEST(Additive, CouplingReducesVariance) {
  const std::vector<double> box{2, 1, 2, 1};
  const Zonotope k = Zonotope::box(box);
  KinematicOptions opts;
  opts.samples = 5000;
  const double coupled = additive_kinematic_delta(k, k, opts).sample_variance;
  const double plain = uncoupled_additive_delta(k, k, opts).sample_variance;
  EXPECT_GT(plain, 10.0 * coupled);
}

TEST(Additive, CubeHasZeroDelta) {
  const std::vector<double> cube{1, 1, 1, 1};
  const Zonotope k = Zonotope::box(cube);
  KinematicOptions opts;
  opts.samples = 20000;
  const MCEstimate e = principal_kinematic_delta(k, k, opts);
  EXPECT_NEAR(std::abs(e.reference.value_or(1.0)), 0.0, 1e-12);
  EXPECT_TRUE(e.within(4.0));
}

TEST(Reproducing, SmallVolumeRun) {
  const std::vector<double> box{2, 1, 2, 1};
  const Polytope k = Polytope::box(box);
  ReproducingOptions opts;
  opts.groups = 10;
  opts.translations = 200;
  const MCEstimate e = reproducing_check(Valuation::make(ValuationKind::vol, 2), k, k, opts);
  EXPECT_NEAR(std::abs(*e.reference - 16.0), 0.0, 1e-12);
  EXPECT_TRUE(e.within(4.0)) << e.mean << " +- " << e.std_error;
}

TEST(Reproducing, RejectsLowerDimensionalBodies) {
  std::vector<RVector> gens{unit(4, 0), unit(4, 2)};
  const Polytope flat = Polytope::parallelotope(RVector::Zero(4), gens);
  EXPECT_SUVAL_ERROR(reproducing_check(Valuation::make(ValuationKind::vol, 2), flat, flat, {}), ErrorCode::LowerDimensional);
}

TEST(Estimate, Reference) {
  MCEstimate e;
  e.mean = 1.0;
  e.std_error = 0.1;
  e.set_reference(1.25);
  EXPECT_NEAR(*e.z_score, 2.5, 1e-12);
  EXPECT_TRUE(e.within(3.0));
  EXPECT_FALSE(e.within(2.0));
}
