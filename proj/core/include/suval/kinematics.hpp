#pragma once

// Haar sampling on U(n) / SU(n) and Monte Carlo checks of the SU(n)
// kinematic and additive kinematic formulas.

#include <cstdint>
#include <optional>
#include <string>

#include "suval/polytope.hpp"
#include "suval/valuations.hpp"

namespace suval {

/// Ginibre QR with the phases of diag(R) moved into Q.
CMatrix sample_unitary(int n, Rng& rng);
/// Haar unitary with the first column divided by its determinant.
CMatrix sample_special_unitary(int n, Rng& rng);

struct CoupledPair {
  CMatrix su;  // = u * diag(det(u)^{-1}, 1, ..., 1)
  CMatrix u;
};
CoupledPair coupled_pair(int n, Rng& rng);

struct MCEstimate {
  Complex mean;
  double std_error = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::optional<Complex> reference;
  std::optional<double> z_score;
  double sample_variance = 0.0;  // per-sample variance of the real part

  void set_reference(Complex ref);
  /// |mean - reference| <= z * stderr.
  bool within(double z) const;
};

/// Coefficient of the phi_2 term in the SU(n) kinematic formula, written
/// with the unified sign (-1)^n.
double phi2_kinematic_coefficient(int n);
/// Same coefficient written per parity: + for even n, - for odd n.
double phi2_kinematic_coefficient_by_parity(int n);
/// 1/2^n for even n, 0 for odd n.
double phi1_kinematic_coefficient(int n);

/// Bilinear correction c1 (phi1(K) conj(phi1(L)) + c.c.) + c2 (phi2(K) conj(phi2(L)) + c.c.).
Complex kinematic_correction(const Polytope& k, const Polytope& l, int n);

struct KinematicOptions {
  long long samples = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  /// Points per torus orbit in the coupled estimator; 1 gives the plain pair
  /// f(g_SU) - f(g_U).
  int torus_points = 5;
};

/// Mean of vol(K + g_SU L) - vol(K + g_U L) over coupled draws. Each draw
/// averages the difference over a stratified orbit of the maximal torus.
MCEstimate additive_kinematic_delta(const Zonotope& k, const Zonotope& l, const KinematicOptions& options);
/// Same with independent SU and U draws (variance baseline).
MCEstimate uncoupled_additive_delta(const Zonotope& k, const Zonotope& l, const KinematicOptions& options);
/// Integral of chi(K cap (gL + t)) over t is vol(K + (-gL)).
MCEstimate principal_kinematic_delta(const Zonotope& k, const Zonotope& l, const KinematicOptions& options);

struct ReproducingOptions {
  int groups = 40;            // N_g
  int translations = 1000;    // N_t per group draw
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

/// Estimate of the double integral over g in SU(n) and t in R^{2n} of
/// mu(K cap (gL + t)); stderr from the spread of the per-g estimates.
MCEstimate reproducing_check(const Valuation& mu, const Polytope& k, const Polytope& l, const ReproducingOptions& options);
/// Same integrand difference between coupled SU and U draws, on shared translations.
MCEstimate kinematic_delta_by_intersection(const Valuation& mu, const Polytope& k, const Polytope& l,
                                           const ReproducingOptions& options);

}  // namespace suval
