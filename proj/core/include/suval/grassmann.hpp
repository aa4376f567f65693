#pragma once

// Orbit invariants of real subspaces of C^n under U(n) and SU(n): multiple
// Kaehler angles and the Theta-invariant (complex determinant of an
// orthonormal basis).

#include <vector>

#include "suval/numkernel.hpp"
#include "suval/rng.hpp"

namespace suval {

/// Real k-dimensional subspace of C^n = R^{2n}, carried as an orthonormal
/// basis stored in the columns of a 2n x k matrix.
class Subspace {
 public:
  /// Orthonormalizes the given columns (throws RankDeficient if dependent).
  static Subspace from_spanning(int n, const RMatrix& columns);
  /// Complex column vectors, each read as a real 2n-vector.
  static Subspace from_complex(int n, const std::vector<CVector>& vectors);

  int n() const noexcept { return n_; }
  int dim() const noexcept { return static_cast<int>(basis_.cols()); }
  const RMatrix& basis() const noexcept { return basis_; }
  /// Basis vectors as complex n-vectors (columns of an n x k matrix).
  CMatrix complex_basis() const;
  /// Orthogonal projector onto the subspace.
  RMatrix projector() const { return basis_ * basis_.transpose(); }
  /// True when both subspaces have the same span (projector distance).
  bool same_span(const Subspace& other, double tol = 1e-9) const;

 private:
  Subspace(int n, RMatrix basis) : n_(n), basis_(std::move(basis)) {}
  int n_;
  RMatrix basis_;
};

/// Sorted angles 0 <= theta_1 <= ... <= theta_m <= pi/2, m = floor(n/2).
struct KaehlerAngles {
  std::vector<double> angles;
};

/// Theta-invariant. With mod_sign set, value is only defined up to sign and
/// is canonicalized to have argument in [0, pi).
struct ThetaValue {
  Complex value;
  bool mod_sign = false;
};

/// Angle threshold separating "all angles < pi/2" (oriented Theta) from the
/// degenerate case: cos(theta_m) must exceed this.
inline constexpr double kOrientationThreshold = 1e-10;
inline constexpr double kAngleTolerance = 1e-8;

/// Matrix of pi_W o J restricted to W in the stored basis, A_ab = <w_a, J w_b>.
RMatrix compressed_complex_structure(const Subspace& w);

KaehlerAngles kaehler_angles(const Subspace& w);
ThetaValue theta_invariant(const Subspace& w);

/// Canonical representative of a value modulo sign.
Complex canonical_mod_sign(Complex v);
/// Distance between two Theta values, taken modulo sign if either is flagged.
double theta_distance(const ThetaValue& a, const ThetaValue& b);

Subspace apply_unitary(const CMatrix& g, const Subspace& w);
bool same_su_orbit(const Subspace& a, const Subspace& b, double tol = kAngleTolerance);

/// Subspace with the given Kaehler angles and Theta-invariant: the standard
/// orbit model spanned by e_{2j-1} and cos(t_j) i e_{2j-1} + sin(t_j) e_{2j}
/// (plus e_n for odd n), rotated by a unitary of suitable determinant.
Subspace orbit_representative(const KaehlerAngles& angles, Complex theta, int n);

Subspace orthogonal_complement(const Subspace& w);

/// Orthonormalization of k standard normal vectors in R^{2n}.
Subspace random_subspace(int n, int k, Rng& rng);

}  // namespace suval
