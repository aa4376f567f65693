#include "suval/forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "suval/error.hpp"
#include "suval/parallel.hpp"

namespace suval::forms {

// ---------------------------------------------------------------- scalars

Complex GaussRational::to_complex() const {
  return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  const Rational r = re * o.re - im * o.im;
  const Rational i = re * o.im + im * o.re;
  re = r;
  im = i;
  return *this;
}

GaussRational gauss(long long num, long long den) { return GaussRational(Rational(num, den)); }

// ------------------------------------------------------------- polynomials

Polynomial Polynomial::constant(const GaussRational& c) {
  Polynomial p;
  p.add_term(0, c);
  return p;
}

Polynomial Polynomial::variable(int v) {
  if (v < 0 || v >= 16) fail(ErrorCode::BadIndex, "Polynomial::variable: index out of range");
  Polynomial p;
  p.add_term(Key{1} << (4 * v), GaussRational(1));
  return p;
}

void Polynomial::add_term(Key key, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

namespace {

Polynomial::Key add_keys(Polynomial::Key a, Polynomial::Key b) {
  Polynomial::Key out = 0;
  for (int v = 0; v < 16; ++v) {
    const auto e = ((a >> (4 * v)) & 0xF) + ((b >> (4 * v)) & 0xF);
    if (e > 0xF) fail(ErrorCode::InvalidArgument, "Polynomial: exponent overflow");
    out |= e << (4 * v);
  }
  return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(add_keys(ka, kb), ca * cb);
  }
  return out;
}

Polynomial Polynomial::derivative(int v) const {
  Polynomial out;
  for (const auto& [k, c] : terms_) {
    const int e = exponent(k, v);
    if (e == 0) continue;
    out.add_term(k - (Key{1} << (4 * v)), c * GaussRational(e));
  }
  return out;
}

Polynomial Polynomial::conj() const {
  Polynomial out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
  return out;
}

Complex Polynomial::evaluate(std::span<const double> coords) const {
  Complex sum = 0.0;
  for (const auto& [k, c] : terms_) {
    double mono = 1.0;
    Key rest = k;
    for (int v = 0; rest != 0; ++v, rest >>= 4) {
      const int e = static_cast<int>(rest & 0xF);
      for (int p = 0; p < e; ++p) mono *= coords[static_cast<std::size_t>(v)];
    }
    sum += c.to_complex() * mono;
  }
  return sum;
}

// ------------------------------------------------------------------ forms

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxFormDim) {
    fail(ErrorCode::UnsupportedDimension, "forms: complex dimension must be in 1.." + std::to_string(kMaxFormDim));
  }
}

// Sign of moving the sorted generators of `b` past those of `a` into sorted
// position: (-1)^{#(i in a, j in b, i > j)}.
int merge_sign(PolyForm::Mask a, PolyForm::Mask b) {
  int inversions = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

PolyForm::PolyForm(int n, int degree) : n_(n), degree_(degree) {
  check_n(n);
  // Degrees above 4n are allowed and always describe the zero form.
  if (degree < 0) fail(ErrorCode::DegreeMismatch, "PolyForm: negative degree");
}

PolyForm PolyForm::scalar(int n, const GaussRational& c) {
  PolyForm f(n, 0);
  f.add(0, Polynomial::constant(c));
  return f;
}

PolyForm PolyForm::coordinate(int n, int v) {
  PolyForm f(n, 0);
  if (v < 0 || v >= 4 * n) fail(ErrorCode::BadIndex, "PolyForm::coordinate: index out of range");
  f.add(0, Polynomial::variable(v));
  return f;
}

PolyForm PolyForm::differential(int n, int v) {
  PolyForm f(n, 1);
  if (v < 0 || v >= 4 * n) fail(ErrorCode::BadIndex, "PolyForm::differential: index out of range");
  f.add(Mask{1} << v, Polynomial::constant(GaussRational(1)));
  return f;
}

PolyForm PolyForm::monomial(int n, Mask mask, const Polynomial& coefficient) {
  PolyForm f(n, std::popcount(mask));
  if (mask >> (4 * n) != 0) fail(ErrorCode::BadIndex, "PolyForm::monomial: generator out of range");
  f.add(mask, coefficient);
  return f;
}

std::size_t PolyForm::term_count() const {
  std::size_t count = 0;
  for (const auto& [m, p] : terms_) count += p.terms().size();
  return count;
}

void PolyForm::add(Mask mask, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (o.n_ != n_) fail(ErrorCode::DimensionMismatch, "PolyForm +: different n");
  if (o.degree_ != degree_) fail(ErrorCode::DegreeMismatch, "PolyForm +: different degrees");
  for (const auto& [m, p] : o.terms_) add(m, p);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (o.n_ != n_) fail(ErrorCode::DimensionMismatch, "PolyForm -: different n");
  if (o.degree_ != degree_) fail(ErrorCode::DegreeMismatch, "PolyForm -: different degrees");
  for (const auto& [m, p] : o.terms_) {
    Polynomial neg = p;
    neg *= GaussRational(-1);
    add(m, neg);
  }
  return *this;
}

PolyForm& PolyForm::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, p] : terms_) p *= c;
  return *this;
}

PolyForm PolyForm::conj() const {
  PolyForm out(n_, degree_);
  for (const auto& [m, p] : terms_) out.terms_.emplace(m, p.conj());
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "wedge: different n");
  PolyForm out(a.n_, a.degree_ + b.degree_);
  for (const auto& [ma, pa] : a.terms_) {
    for (const auto& [mb, pb] : b.terms_) {
      if ((ma & mb) != 0) continue;
      Polynomial prod = pa * pb;
      if (merge_sign(ma, mb) < 0) prod *= GaussRational(-1);
      out.add(ma | mb, prod);
    }
  }
  return out;
}

PolyForm ext_d(const PolyForm& a) {
  const int top = 4 * a.n_;
  PolyForm out(a.n_, a.degree_ + 1);
  for (const auto& [m, p] : a.terms_) {
    for (int v = 0; v < top; ++v) {
      const PolyForm::Mask bit = PolyForm::Mask{1} << v;
      if ((m & bit) != 0) continue;
      Polynomial dp = p.derivative(v);
      if (dp.is_zero()) continue;
      // dv ^ (monomial m): sign from moving dv past generators below v.
      if (std::popcount(m & (bit - 1)) % 2 != 0) dp *= GaussRational(-1);
      out.add(m | bit, dp);
    }
  }
  return out;
}

PolyForm wedge_power(const PolyForm& a, int l) {
  if (l < 0) fail(ErrorCode::InvalidArgument, "wedge_power: negative exponent");
  PolyForm out = PolyForm::scalar(a.n(), GaussRational(1));
  for (int k = 0; k < l; ++k) out = wedge(out, a);
  return out;
}

PolyForm real_part(const PolyForm& a) { return GaussRational(Rational(1, 2)) * (a + a.conj()); }

PolyForm imag_part(const PolyForm& a) {
  // (a - conj a) / (2i) = -(i/2)(a - conj a)
  return GaussRational(Rational(0), Rational(-1, 2)) * (a - a.conj());
}

namespace {

int x_var(int j) { return 2 * j; }
int y_var(int j) { return 2 * j + 1; }
int xi_var(int n, int j) { return 2 * n + 2 * j; }
int eta_var(int n, int j) { return 2 * n + 2 * j + 1; }

void check_j(int n, int j) {
  if (j < 0 || j >= n) fail(ErrorCode::BadIndex, "coordinate index out of range");
}

PolyForm combine(const PolyForm& re, const PolyForm& im, long long im_sign) {
  return re + GaussRational(Rational(0), Rational(im_sign)) * im;
}

}  // namespace

PolyForm z(int n, int j) {
  check_j(n, j);
  return combine(PolyForm::coordinate(n, x_var(j)), PolyForm::coordinate(n, y_var(j)), 1);
}
PolyForm zeta(int n, int j) {
  check_j(n, j);
  return combine(PolyForm::coordinate(n, xi_var(n, j)), PolyForm::coordinate(n, eta_var(n, j)), 1);
}
PolyForm zeta_bar(int n, int j) {
  check_j(n, j);
  return combine(PolyForm::coordinate(n, xi_var(n, j)), PolyForm::coordinate(n, eta_var(n, j)), -1);
}
PolyForm dz(int n, int j) {
  check_j(n, j);
  return combine(PolyForm::differential(n, x_var(j)), PolyForm::differential(n, y_var(j)), 1);
}
PolyForm dz_bar(int n, int j) {
  check_j(n, j);
  return combine(PolyForm::differential(n, x_var(j)), PolyForm::differential(n, y_var(j)), -1);
}
PolyForm dzeta(int n, int j) {
  check_j(n, j);
  return combine(PolyForm::differential(n, xi_var(n, j)), PolyForm::differential(n, eta_var(n, j)), 1);
}
PolyForm dzeta_bar(int n, int j) {
  check_j(n, j);
  return combine(PolyForm::differential(n, xi_var(n, j)), PolyForm::differential(n, eta_var(n, j)), -1);
}

// ------------------------------------------------------------- evaluation

std::vector<double> SpherePoint::coordinates() const {
  const auto n = z.size();
  std::vector<double> c(static_cast<std::size_t>(4 * n));
  for (Eigen::Index j = 0; j < n; ++j) {
    c[static_cast<std::size_t>(2 * j)] = z(j).real();
    c[static_cast<std::size_t>(2 * j + 1)] = z(j).imag();
    c[static_cast<std::size_t>(2 * n + 2 * j)] = zeta(j).real();
    c[static_cast<std::size_t>(2 * n + 2 * j + 1)] = zeta(j).imag();
  }
  return c;
}

SpherePoint SpherePoint::random(int n, Rng& rng) {
  SpherePoint p{CVector(n), CVector(n)};
  for (int j = 0; j < n; ++j) p.z(j) = Complex(rng.normal(), rng.normal());
  for (int j = 0; j < n; ++j) p.zeta(j) = Complex(rng.normal(), rng.normal());
  p.zeta /= p.zeta.norm();
  return p;
}

namespace {

double minor_det(const RMatrix& frame, PolyForm::Mask mask) {
  const int k = std::popcount(mask);
  if (k == 0) return 1.0;
  RMatrix sub(k, frame.cols());
  int r = 0;
  for (PolyForm::Mask m = mask; m != 0; m &= m - 1) sub.row(r++) = frame.row(std::countr_zero(m));
  if (k == 1) return sub(0, 0);
  if (k == 2) return sub(0, 0) * sub(1, 1) - sub(0, 1) * sub(1, 0);
  return sub.partialPivLu().determinant();
}

}  // namespace

Complex eval_at(const PolyForm& a, const SpherePoint& p, std::span<const RVector> vectors) {
  if (static_cast<int>(vectors.size()) != a.degree()) {
    fail(ErrorCode::ArityMismatch, "eval_at: need exactly degree-many vectors");
  }
  if (p.z.size() != a.n() || p.zeta.size() != a.n()) fail(ErrorCode::DimensionMismatch, "eval_at: point has wrong n");
  const int dim = 4 * a.n();
  RMatrix frame(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t b = 0; b < vectors.size(); ++b) {
    if (vectors[b].size() != dim) fail(ErrorCode::DimensionMismatch, "eval_at: vectors must have length 4n");
    frame.col(static_cast<Eigen::Index>(b)) = vectors[b];
  }
  const auto coords = p.coordinates();
  Complex sum = 0.0;
  for (const auto& [mask, poly] : a.terms()) {
    const double det = minor_det(frame, mask);
    if (det == 0.0) continue;
    sum += poly.evaluate(coords) * det;
  }
  return sum;
}

namespace {

RVector random_unit(int dim, Rng& rng) {
  RVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.normal();
  return v;
}

void project_sphere(const SpherePoint& p, RVector& v) {
  const int n = static_cast<int>(p.zeta.size());
  const RVector zr = to_real(p.zeta);
  auto block = v.segment(2 * n, 2 * n);
  block -= zr.dot(block) * zr;
}

}  // namespace

std::vector<RVector> random_tangent_frame(const SpherePoint& p, int count, Rng& rng) {
  const int n = static_cast<int>(p.zeta.size());
  std::vector<RVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    RVector v = random_unit(4 * n, rng);
    project_sphere(p, v);
    out.push_back(v / v.norm());
  }
  return out;
}

std::vector<RVector> random_contact_frame(const SpherePoint& p, int count, Rng& rng) {
  const int n = static_cast<int>(p.zeta.size());
  const RVector zr = to_real(p.zeta);
  std::vector<RVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    RVector v = random_unit(4 * n, rng);
    project_sphere(p, v);
    // alpha(v) = <zeta, v_z> in the real sense.
    auto zpart = v.head(2 * n);
    zpart -= zr.dot(zpart) * zr;
    out.push_back(v / v.norm());
  }
  return out;
}

IdentityReport check_identity_on_sphere_bundle(const PolyForm& lhs, const PolyForm& rhs, int samples,
                                               double tol, Rng& rng, unsigned workers) {
  if (lhs.degree() != rhs.degree()) fail(ErrorCode::DegreeMismatch, "check_identity: degrees differ");
  if (lhs.n() != rhs.n()) fail(ErrorCode::DimensionMismatch, "check_identity: different n");
  const PolyForm diff = lhs - rhs;
  const Rng base = rng.split(0x1de7);
  rng = rng.split(0x1de8);  // advance the caller's stream deterministically
  struct Partial {
    double residual = 0.0;
    double magnitude = 0.0;
  };
  constexpr std::size_t kChunks = 16;
  const auto parts = run_chunks<Partial>(kChunks, workers, [&](std::size_t chunk) {
    Partial part;
    for (int s = static_cast<int>(chunk); s < samples; s += static_cast<int>(kChunks)) {
      Rng local = base.split(static_cast<std::uint64_t>(s));
      const auto point = SpherePoint::random(lhs.n(), local);
      for (int f = 0; f < 2; ++f) {
        const auto frame = random_tangent_frame(point, lhs.degree(), local);
        part.residual = std::max(part.residual, std::abs(eval_at(diff, point, frame)));
        part.magnitude = std::max(part.magnitude, std::abs(eval_at(lhs, point, frame)));
      }
    }
    return part;
  });
  IdentityReport report;
  report.samples = samples;
  for (const auto& p : parts) {
    report.max_residual = std::max(report.max_residual, p.residual);
    report.max_magnitude = std::max(report.max_magnitude, p.magnitude);
  }
  report.pass = report.max_residual <= tol;
  return report;
}

}  // namespace suval::forms
