#include "suval/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "suval/error.hpp"

namespace suval {

Subspace Subspace::from_spanning(int n, const RMatrix& columns) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "Subspace: n must be positive");
  if (columns.rows() != 2 * n) fail(ErrorCode::ShapeMismatch, "Subspace: basis vectors must have length 2n");
  if (columns.cols() < 1 || columns.cols() > 2 * n) {
    fail(ErrorCode::WrongDimension, "Subspace: dimension must be in 1..2n");
  }
  return Subspace(n, orthonormalize_columns(columns));
}

Subspace Subspace::from_complex(int n, const std::vector<CVector>& vectors) {
  RMatrix cols(2 * n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) fail(ErrorCode::ShapeMismatch, "Subspace: complex vector of wrong length");
    cols.col(static_cast<Eigen::Index>(j)) = to_real(vectors[j]);
  }
  return from_spanning(n, cols);
}

CMatrix Subspace::complex_basis() const {
  CMatrix out(n_, basis_.cols());
  for (Eigen::Index j = 0; j < basis_.cols(); ++j) out.col(j) = to_complex(basis_.col(j));
  return out;
}

bool Subspace::same_span(const Subspace& other, double tol) const {
  if (other.n_ != n_ || other.dim() != dim()) return false;
  return (projector() - other.projector()).norm() <= tol;
}

RMatrix compressed_complex_structure(const Subspace& w) {
  return w.basis().transpose() * complex_structure(w.n()) * w.basis();
}

namespace {

void require_middle(const Subspace& w, const char* who) {
  if (w.dim() != w.n()) {
    fail(ErrorCode::WrongDimension, std::string(who) + ": subspace must have real dimension n");
  }
}

std::vector<double> angles_from_spectrum(const std::vector<double>& c) {
  std::vector<double> out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out[j] = std::acos(std::clamp(c[j], 0.0, 1.0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

KaehlerAngles kaehler_angles(const Subspace& w) {
  require_middle(w, "kaehler_angles");
  return {angles_from_spectrum(skew_spectrum(compressed_complex_structure(w)))};
}

Complex canonical_mod_sign(Complex v) {
  if (v.imag() < 0.0 || (v.imag() == 0.0 && v.real() < 0.0)) return -v;
  return v;
}

ThetaValue theta_invariant(const Subspace& w) {
  require_middle(w, "theta_invariant");
  const int n = w.n();
  const Complex det = complex_det(w.complex_basis());
  if (n % 2 == 0) {
    // The symplectic form <J u, v> restricted to W; its Pfaffian is
    // prod cos(theta_j) up to the orientation sign of the basis.
    const RMatrix omega = -compressed_complex_structure(w);
    const RMatrix sym = 0.5 * (omega - omega.transpose());
    const auto spectrum = skew_spectrum(sym);
    const double min_cos = spectrum.empty() ? 0.0 : *std::min_element(spectrum.begin(), spectrum.end());
    if (min_cos > kOrientationThreshold) {
      const double pf = pfaffian(sym);
      return {pf > 0.0 ? det : -det, false};
    }
  }
  return {canonical_mod_sign(det), true};
}

double theta_distance(const ThetaValue& a, const ThetaValue& b) {
  const double direct = std::abs(a.value - b.value);
  if (!a.mod_sign && !b.mod_sign) return direct;
  return std::min(direct, std::abs(a.value + b.value));
}

Subspace apply_unitary(const CMatrix& g, const Subspace& w) {
  if (g.rows() != w.n() || g.cols() != w.n()) fail(ErrorCode::DimensionMismatch, "apply_unitary: size mismatch");
  if (!is_unitary(g, 1e-9)) fail(ErrorCode::NotUnitary, "apply_unitary: g g* != I");
  return Subspace::from_spanning(w.n(), realify(g) * w.basis());
}

bool same_su_orbit(const Subspace& a, const Subspace& b, double tol) {
  if (a.n() != b.n() || a.dim() != b.dim()) {
    fail(ErrorCode::DimensionMismatch, "same_su_orbit: subspaces differ in n or dimension");
  }
  if (a.dim() != a.n()) {
    // Away from the middle dimension the U(n)- and SU(n)-orbits coincide and
    // are told apart by the spectrum of the compressed complex structure.
    const auto sa = skew_spectrum(compressed_complex_structure(a));
    const auto sb = skew_spectrum(compressed_complex_structure(b));
    const auto ta = angles_from_spectrum(sa);
    const auto tb = angles_from_spectrum(sb);
    for (std::size_t j = 0; j < ta.size(); ++j) {
      if (std::abs(ta[j] - tb[j]) > tol) return false;
    }
    return true;
  }
  const auto ka = kaehler_angles(a);
  const auto kb = kaehler_angles(b);
  for (std::size_t j = 0; j < ka.angles.size(); ++j) {
    if (std::abs(ka.angles[j] - kb.angles[j]) > tol) return false;
  }
  return theta_distance(theta_invariant(a), theta_invariant(b)) <= tol;
}

Subspace orbit_representative(const KaehlerAngles& angles, Complex theta, int n) {
  const int m = n / 2;
  if (static_cast<int>(angles.angles.size()) != m) {
    fail(ErrorCode::WrongDimension, "orbit_representative: need floor(n/2) angles");
  }
  double sin_prod = 1.0;
  for (double t : angles.angles) {
    if (t < -1e-12 || t > kPi / 2 + 1e-12) fail(ErrorCode::InvalidArgument, "orbit_representative: angle outside [0, pi/2]");
    sin_prod *= std::sin(t);
  }
  if (std::abs(std::abs(theta) - sin_prod) > 1e-9) {
    fail(ErrorCode::InconsistentTheta, "orbit_representative: |theta| must equal the product of sines");
  }
  const Complex i(0.0, 1.0);
  std::vector<CVector> vectors;
  for (int j = 0; j < m; ++j) {
    const double t = angles.angles[static_cast<std::size_t>(j)];
    CVector a = CVector::Zero(n);
    CVector b = CVector::Zero(n);
    a(2 * j) = 1.0;
    b(2 * j) = std::cos(t) * i;
    b(2 * j + 1) = std::sin(t);
    vectors.push_back(a);
    vectors.push_back(b);
  }
  if (n % 2 == 1) {
    CVector e = CVector::Zero(n);
    e(n - 1) = 1.0;
    vectors.push_back(e);
  }
  const Subspace model = Subspace::from_complex(n, vectors);
  if (sin_prod <= 1e-12) return model;
  CMatrix g = CMatrix::Identity(n, n);
  g(0, 0) = theta / sin_prod;
  g(0, 0) /= std::abs(g(0, 0));
  return apply_unitary(g, model);
}

Subspace orthogonal_complement(const Subspace& w) {
  const auto d = w.basis().rows();
  const auto k = w.dim();
  if (k == d) fail(ErrorCode::WrongDimension, "orthogonal_complement: complement of the whole space is zero");
  Eigen::HouseholderQR<RMatrix> qr(w.basis());
  const RMatrix q = qr.householderQ() * RMatrix::Identity(d, d);
  return Subspace::from_spanning(w.n(), q.rightCols(d - k));
}

Subspace random_subspace(int n, int k, Rng& rng) {
  if (n < 1 || k < 1 || k > 2 * n) fail(ErrorCode::WrongDimension, "random_subspace: need 1 <= k <= 2n");
  for (;;) {
    RMatrix g(2 * n, k);
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
      for (Eigen::Index r = 0; r < g.rows(); ++r) g(r, c) = rng.normal();
    }
    try {
      return Subspace::from_spanning(n, g);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RankDeficient) throw;
    }
  }
}

}  // namespace suval
