#pragma once

// Small dense real/complex linear algebra shared by the geometry modules.
// Everything here is sized for desk-scale problems (dimension <= ~32).

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace suval {

using Complex = std::complex<double>;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Relative rank tolerance used by orthonormalize().
inline constexpr double kRankTolerance = 1e-10;

/// Gram-Schmidt (two passes) over `vectors`; throws RankDeficient when a
/// vector's residual falls below kRankTolerance times the largest input norm.
std::vector<RVector> orthonormalize(std::span<const RVector> vectors);

/// Same, with the vectors as matrix columns.
RMatrix orthonormalize_columns(const RMatrix& columns);

/// Determinant of the complex matrix with the given columns.
Complex complex_det(std::span<const CVector> columns);
Complex complex_det(const CMatrix& m);

/// For a real skew-symmetric d x d matrix, returns floor(d/2) values
/// c_1 >= ... >= c_m >= 0 such that the eigenvalues are +-i c_j (and 0 when
/// d is odd). Computed by pairing singular values.
std::vector<double> skew_spectrum(const RMatrix& a);

/// Pfaffian of a real skew-symmetric matrix of even size.
double pfaffian(const RMatrix& a);

/// Volume of the d-dimensional unit ball, pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(int d);

// --- identification C^n = R^{2n}, coordinates (x_1, y_1, ..., x_n, y_n) ---

/// Real 2n-vector -> complex n-vector, z_j = v[2j] + i v[2j+1].
CVector to_complex(const RVector& v);
/// Complex n-vector -> real 2n-vector.
RVector to_real(const CVector& z);
/// The real 2n x 2n matrix of a complex-linear map.
RMatrix realify(const CMatrix& g);
/// Multiplication by i as a real 2n x 2n matrix (90 degree rotation in each
/// complex coordinate plane).
RMatrix complex_structure(int n);

bool is_unitary(const CMatrix& g, double tol = 1e-9);
bool is_orthogonal(const RMatrix& g, double tol = 1e-9);

}  // namespace suval
