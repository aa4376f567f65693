#include "suval/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "suval/error.hpp"

namespace suval {

std::vector<RVector> orthonormalize(std::span<const RVector> vectors) {
  if (vectors.empty()) return {};
  const auto dim = vectors.front().size();
  double max_norm = 0.0;
  for (const auto& v : vectors) {
    if (v.size() != dim) fail(ErrorCode::ShapeMismatch, "orthonormalize: vectors differ in length");
    if (!v.allFinite()) fail(ErrorCode::InvalidArgument, "orthonormalize: non-finite entry");
    max_norm = std::max(max_norm, v.norm());
  }
  const double tol = kRankTolerance * std::max(max_norm, 1e-300);
  std::vector<RVector> out;
  out.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    RVector w = vectors[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) w -= q.dot(w) * q;
    }
    const double norm = w.norm();
    if (norm <= tol || max_norm == 0.0) {
      fail(ErrorCode::RankDeficient,
           "orthonormalize: vector " + std::to_string(i) + " is dependent on its predecessors");
    }
    out.push_back(w / norm);
  }
  return out;
}

RMatrix orthonormalize_columns(const RMatrix& columns) {
  std::vector<RVector> cols;
  cols.reserve(static_cast<std::size_t>(columns.cols()));
  for (Eigen::Index j = 0; j < columns.cols(); ++j) cols.emplace_back(columns.col(j));
  const auto q = orthonormalize(cols);
  RMatrix out(columns.rows(), columns.cols());
  for (Eigen::Index j = 0; j < columns.cols(); ++j) out.col(j) = q[static_cast<std::size_t>(j)];
  return out;
}

Complex complex_det(const CMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "complex_det: matrix is not square");
  if (m.rows() == 0) return Complex(1.0, 0.0);
  return m.partialPivLu().determinant();
}

Complex complex_det(std::span<const CVector> columns) {
  const auto n = static_cast<Eigen::Index>(columns.size());
  CMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (columns[static_cast<std::size_t>(j)].size() != n) {
      fail(ErrorCode::ShapeMismatch, "complex_det: need n columns of length n");
    }
    m.col(j) = columns[static_cast<std::size_t>(j)];
  }
  return complex_det(m);
}

namespace {

void require_skew(const RMatrix& a, const char* who) {
  if (a.rows() != a.cols()) fail(ErrorCode::ShapeMismatch, std::string(who) + ": matrix is not square");
  if ((a + a.transpose()).norm() > 1e-10 * std::max(1.0, a.norm())) {
    fail(ErrorCode::NotSkew, std::string(who) + ": matrix is not skew-symmetric");
  }
}

}  // namespace

std::vector<double> skew_spectrum(const RMatrix& a) {
  require_skew(a, "skew_spectrum");
  const auto d = a.rows();
  const auto m = static_cast<std::size_t>(d / 2);
  std::vector<double> out(m, 0.0);
  if (d < 2) return out;
  // Singular values of a real skew matrix come in equal pairs (c, c), plus a
  // single zero when d is odd; they are returned sorted descending.
  const Eigen::VectorXd sv = a.jacobiSvd().singularValues();
  for (std::size_t j = 0; j < m; ++j) {
    out[j] = 0.5 * (sv(static_cast<Eigen::Index>(2 * j)) + sv(static_cast<Eigen::Index>(2 * j + 1)));
  }
  return out;
}

double pfaffian(const RMatrix& input) {
  require_skew(input, "pfaffian");
  const auto d = input.rows();
  if (d % 2 != 0) fail(ErrorCode::OddDimension, "pfaffian: odd dimension");
  RMatrix a = 0.5 * (input - input.transpose());
  double pf = 1.0;
  // Skew-symmetric Gaussian elimination with pivoting (Parlett-Reid style):
  // bring the largest entry of column k below the diagonal to row k+1.
  for (Eigen::Index k = 0; k + 1 < d; k += 2) {
    Eigen::Index piv = k + 1;
    double best = std::abs(a(k + 1, k));
    for (Eigen::Index i = k + 2; i < d; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    }
    if (piv != k + 1) {
      a.row(k + 1).swap(a.row(piv));
      a.col(k + 1).swap(a.col(piv));
      pf = -pf;
    }
    const double pivot = a(k, k + 1);
    if (pivot == 0.0) return 0.0;
    pf *= pivot;
    for (Eigen::Index i = k + 2; i < d; ++i) {
      const double tau = a(k, i) / pivot;
      // row/col i -= tau * row/col (k+1) keeps the matrix skew.
      a.row(i) -= tau * a.row(k + 1);
      a.col(i) -= tau * a.col(k + 1);
    }
  }
  return pf;
}

double unit_ball_volume(int d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "unit_ball_volume: negative dimension");
  return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

CVector to_complex(const RVector& v) {
  if (v.size() % 2 != 0) fail(ErrorCode::ShapeMismatch, "to_complex: odd length");
  CVector z(v.size() / 2);
  for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = Complex(v(2 * j), v(2 * j + 1));
  return z;
}

RVector to_real(const CVector& z) {
  RVector v(2 * z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    v(2 * j) = z(j).real();
    v(2 * j + 1) = z(j).imag();
  }
  return v;
}

RMatrix realify(const CMatrix& g) {
  RMatrix r(2 * g.rows(), 2 * g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double re = g(i, j).real();
      const double im = g(i, j).imag();
      r(2 * i, 2 * j) = re;
      r(2 * i, 2 * j + 1) = -im;
      r(2 * i + 1, 2 * j) = im;
      r(2 * i + 1, 2 * j + 1) = re;
    }
  }
  return r;
}

RMatrix complex_structure(int n) {
  return realify(CMatrix::Identity(n, n) * Complex(0.0, 1.0));
}

bool is_unitary(const CMatrix& g, double tol) {
  if (g.rows() != g.cols()) return false;
  return (g * g.adjoint() - CMatrix::Identity(g.rows(), g.cols())).norm() <= tol;
}

bool is_orthogonal(const RMatrix& g, double tol) {
  if (g.rows() != g.cols()) return false;
  return (g * g.transpose() - RMatrix::Identity(g.rows(), g.cols())).norm() <= tol;
}

}  // namespace suval
