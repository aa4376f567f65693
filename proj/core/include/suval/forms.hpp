#pragma once

// Exterior calculus on C^n x C^n with polynomial coefficients.
//
// Real variables are ordered (x_1, y_1, ..., x_n, y_n, xi_1, eta_1, ...,
// xi_n, eta_n) with z_j = x_j + i y_j and zeta_j = xi_j + i eta_j; the
// one-form generators dx_j, dy_j, dxi_j, deta_j use the same order. A k-form
// is a map from sorted wedge monomials (bitmasks over the 4n generators) to
// polynomials with exact Gaussian-rational coefficients. Evaluation is in
// double precision with the determinant convention
// (dv_1 ^ ... ^ dv_k)(u_1, ..., u_k) = det[dv_a(u_b)].

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "suval/numkernel.hpp"
#include "suval/rng.hpp"

namespace suval::forms {

using Rational = boost::rational<long long>;

/// Exact complex number with rational real and imaginary parts.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r, Rational i = Rational(0)) : re(r), im(i) {}  // NOLINT

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }
  GaussRational conj() const { return {re, -im}; }
  Complex to_complex() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

GaussRational gauss(long long num, long long den = 1);

/// Largest supported complex dimension (4 bits of exponent per variable in a
/// 64-bit key, 4n generators in a 32-bit mask).
inline constexpr int kMaxFormDim = 4;

/// Polynomial in the 4n real variables; exponents packed 4 bits per variable.
class Polynomial {
 public:
  using Key = std::uint64_t;

  Polynomial() = default;
  static Polynomial constant(const GaussRational& c);
  static Polynomial variable(int v);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, GaussRational>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussRational& c);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial derivative(int v) const;
  Polynomial conj() const;
  Complex evaluate(std::span<const double> coords) const;

  static int exponent(Key key, int v) { return static_cast<int>((key >> (4 * v)) & 0xF); }

 private:
  void add_term(Key key, const GaussRational& c);
  std::map<Key, GaussRational> terms_;
};

/// Homogeneous differential form of a fixed degree on C^n x C^n.
class PolyForm {
 public:
  using Mask = std::uint32_t;

  PolyForm(int n, int degree);
  static PolyForm zero(int n, int degree) { return PolyForm(n, degree); }
  static PolyForm scalar(int n, const GaussRational& c);
  /// The 0-form given by a single real coordinate.
  static PolyForm coordinate(int n, int v);
  /// The 1-form d(variable v).
  static PolyForm differential(int n, int v);
  /// A polynomial times a wedge monomial (mask must have `degree` bits).
  static PolyForm monomial(int n, Mask mask, const Polynomial& coefficient);

  int n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  int num_generators() const noexcept { return 4 * n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, Polynomial>& terms() const { return terms_; }
  std::size_t term_count() const;

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const GaussRational& c);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator-(PolyForm a) { return a *= GaussRational(-1); }
  friend PolyForm operator*(const GaussRational& c, PolyForm a) { return a *= c; }
  friend PolyForm operator*(PolyForm a, const GaussRational& c) { return a *= c; }
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  PolyForm conj() const;

 private:
  friend PolyForm wedge(const PolyForm& a, const PolyForm& b);
  friend PolyForm ext_d(const PolyForm& a);
  void add(Mask mask, const Polynomial& p);

  int n_;
  int degree_;
  std::map<Mask, Polynomial> terms_;
};

/// Graded-commutative product.
PolyForm wedge(const PolyForm& a, const PolyForm& b);
/// Exterior derivative.
PolyForm ext_d(const PolyForm& a);
/// a ^ a ^ ... (l factors); l = 0 gives the constant 1.
PolyForm wedge_power(const PolyForm& a, int l);
PolyForm real_part(const PolyForm& a);
PolyForm imag_part(const PolyForm& a);

// Complex coordinate helpers (0-forms and 1-forms).
PolyForm z(int n, int j);
PolyForm zeta(int n, int j);
PolyForm zeta_bar(int n, int j);
PolyForm dz(int n, int j);
PolyForm dz_bar(int n, int j);
PolyForm dzeta(int n, int j);
PolyForm dzeta_bar(int n, int j);

/// Point (z, zeta) of the sphere bundle C^n x S^{2n-1}.
struct SpherePoint {
  CVector z;
  CVector zeta;

  /// Real coordinates in variable order.
  std::vector<double> coordinates() const;
  static SpherePoint random(int n, Rng& rng);
};

/// Evaluates `a` at `p` on `vectors` (each a real 4n-vector). Throws
/// ArityMismatch unless vectors.size() == degree.
Complex eval_at(const PolyForm& a, const SpherePoint& p, std::span<const RVector> vectors);

/// Random unit vectors tangent to the sphere bundle at p (zeta-block projected
/// orthogonally to zeta).
std::vector<RVector> random_tangent_frame(const SpherePoint& p, int count, Rng& rng);
/// Random unit vectors tangent to the sphere bundle that also lie in the
/// contact distribution ker(alpha).
std::vector<RVector> random_contact_frame(const SpherePoint& p, int count, Rng& rng);

struct IdentityReport {
  std::string name;
  double max_residual = 0.0;
  double max_magnitude = 0.0;  // largest |lhs| seen, for scale
  int samples = 0;
  bool pass = false;
};

/// Checks lhs == rhs as forms restricted to the sphere bundle by evaluating
/// lhs - rhs at `samples` random points on random tangent frames.
IdentityReport check_identity_on_sphere_bundle(const PolyForm& lhs, const PolyForm& rhs, int samples,
                                               double tol, Rng& rng, unsigned workers = 0);

}  // namespace suval::forms
