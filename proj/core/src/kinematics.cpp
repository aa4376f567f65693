#include "suval/kinematics.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

#include "suval/error.hpp"
#include "suval/parallel.hpp"

namespace suval {

CMatrix sample_unitary(int n, Rng& rng) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "sample_unitary: n >= 1");
  CMatrix z(n, n);
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = Complex(re * s, im * s);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= a > 0.0 ? d / a : Complex(1.0);
  }
  return q;
}

CMatrix sample_special_unitary(int n, Rng& rng) {
  CMatrix g = sample_unitary(n, rng);
  g.col(0) /= g.determinant();
  return g;
}

CoupledPair coupled_pair(int n, Rng& rng) {
  CoupledPair p;
  p.u = sample_unitary(n, rng);
  p.su = p.u;
  p.su.col(0) /= p.u.determinant();
  return p;
}

void MCEstimate::set_reference(Complex ref) {
  reference = ref;
  const double diff = std::abs(mean - ref);
  z_score = std_error > 0.0 ? diff / std_error : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
}

bool MCEstimate::within(double z) const { return z_score.has_value() && *z_score <= z; }

double phi2_kinematic_coefficient(int n) {
  const double wn = unit_ball_volume(n);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * wn * wn / ((n + 2) * std::ldexp(1.0, 2 * n - 1) * unit_ball_volume(2 * n));
}

double phi2_kinematic_coefficient_by_parity(int n) {
  const double wn = unit_ball_volume(n);
  const double magnitude = wn * wn / ((n + 2) * std::ldexp(1.0, 2 * n - 1) * unit_ball_volume(2 * n));
  return n % 2 == 0 ? magnitude : -magnitude;
}

double phi1_kinematic_coefficient(int n) { return n % 2 == 0 ? std::ldexp(1.0, -n) : 0.0; }

Complex kinematic_correction(const Polytope& k, const Polytope& l, int n) {
  Complex total = 0.0;
  if (n % 2 == 0) {
    const auto phi1 = Valuation::make(ValuationKind::phi1, n);
    const Complex a = evaluate(phi1, k);
    const Complex b = evaluate(phi1, l);
    total += phi1_kinematic_coefficient(n) * (a * std::conj(b) + std::conj(a) * b);
  }
  const auto phi2 = Valuation::make(ValuationKind::phi2, n);
  const Complex a = evaluate(phi2, k);
  const Complex b = evaluate(phi2, l);
  total += phi2_kinematic_coefficient(n) * (a * std::conj(b) + std::conj(a) * b);
  return total;
}

namespace {

constexpr std::size_t kChunks = 64;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  long long count = 0;
};

MCEstimate finish(const std::vector<Moments>& parts, std::uint64_t seed) {
  Moments m;
  for (const auto& p : parts) {
    m.sum += p.sum;
    m.sum_sq += p.sum_sq;
    m.count += p.count;
  }
  MCEstimate e;
  e.seed = seed;
  e.samples = m.count;
  if (m.count == 0) return e;
  const double mean = m.sum / static_cast<double>(m.count);
  const double var = m.count > 1 ? std::max(0.0, (m.sum_sq - m.count * mean * mean) / static_cast<double>(m.count - 1)) : 0.0;
  e.mean = mean;
  e.sample_variance = var;
  e.std_error = std::sqrt(var / static_cast<double>(m.count));
  return e;
}

MCEstimate from_values(const std::vector<double>& values, std::uint64_t seed) {
  Moments m;
  for (double v : values) {
    m.sum += v;
    m.sum_sq += v * v;
    ++m.count;
  }
  return finish({m}, seed);
}

RMatrix generator_matrix(const Zonotope& z) {
  RMatrix m(z.ambient_dim(), static_cast<Eigen::Index>(z.generators.size()));
  for (std::size_t j = 0; j < z.generators.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = z.generators[j];
  return m;
}

void check_bodies(const Zonotope& k, const Zonotope& l) {
  if (k.ambient_dim() != l.ambient_dim() || k.ambient_dim() % 2 != 0) {
    fail(ErrorCode::DimensionMismatch, "kinematic delta: bodies must live in the same R^{2n}");
  }
  if (k.generators.size() > 12 || l.generators.size() > 12) {
    fail(ErrorCode::UnsupportedBody, "kinematic delta: volumes need at most 12 generators per body");
  }
}

Complex correction_reference(const Zonotope& k, const Zonotope& l) {
  return kinematic_correction(k.to_polytope(), l.to_polytope(), k.ambient_dim() / 2);
}

// diag(e^{ia}, e^{-ia}, 1, ..., 1) * diag(phase, 1, ..., 1) applied on the right.
CMatrix right_torus(const CMatrix& g, double a, Complex phase) {
  CMatrix h = g;
  h.col(0) *= std::polar(1.0, a) * phase;
  if (g.cols() > 1) h.col(1) *= std::polar(1.0, -a);
  return h;
}

}  // namespace

MCEstimate additive_kinematic_delta(const Zonotope& k, const Zonotope& l, const KinematicOptions& options) {
  check_bodies(k, l);
  const int n = k.ambient_dim() / 2;
  const int m = std::max(options.torus_points, 1);
  const ZonotopeVolumeKernel kernel(k.generators, static_cast<int>(l.generators.size()));
  const RMatrix lm = generator_matrix(l);
  const Rng base(options.seed, 0xadd);
  const long long samples = options.samples;
  const auto parts = run_chunks<Moments>(kChunks, options.workers, [&](std::size_t chunk) {
    Rng rng = base.split(chunk);
    Moments acc;
    auto vol = [&](const CMatrix& g) { return kernel.volume(realify(g) * lm); };
    for (long long s = static_cast<long long>(chunk); s < samples; s += static_cast<long long>(kChunks)) {
      const auto pair = coupled_pair(n, rng);
      double y = 0.0;
      if (m == 1) {
        y = vol(pair.su) - vol(pair.u);
      } else {
        const Complex delta = pair.u.determinant();
        const double a0 = rng.uniform(0.0, 2.0 * kPi / m);
        for (int j = 0; j < m; ++j) {
          const double a = a0 + 2.0 * kPi * j / m;
          const Complex phase = delta * std::polar(1.0, 2.0 * kPi * j / m);
          y += vol(right_torus(pair.su, a, 1.0)) - vol(right_torus(pair.su, a, phase));
        }
        y /= m;
      }
      acc.sum += y;
      acc.sum_sq += y * y;
      ++acc.count;
    }
    return acc;
  });
  MCEstimate e = finish(parts, options.seed);
  e.set_reference(correction_reference(k, l));
  return e;
}

MCEstimate uncoupled_additive_delta(const Zonotope& k, const Zonotope& l, const KinematicOptions& options) {
  check_bodies(k, l);
  const int n = k.ambient_dim() / 2;
  const ZonotopeVolumeKernel kernel(k.generators, static_cast<int>(l.generators.size()));
  const RMatrix lm = generator_matrix(l);
  const Rng base(options.seed, 0x0dd);
  const long long samples = options.samples;
  const auto parts = run_chunks<Moments>(kChunks, options.workers, [&](std::size_t chunk) {
    Rng rng = base.split(chunk);
    Moments acc;
    for (long long s = static_cast<long long>(chunk); s < samples; s += static_cast<long long>(kChunks)) {
      const CMatrix su = sample_special_unitary(n, rng);
      const CMatrix u = sample_unitary(n, rng);
      const double y = kernel.volume(realify(su) * lm) - kernel.volume(realify(u) * lm);
      acc.sum += y;
      acc.sum_sq += y * y;
      ++acc.count;
    }
    return acc;
  });
  MCEstimate e = finish(parts, options.seed);
  e.set_reference(correction_reference(k, l));
  return e;
}

MCEstimate principal_kinematic_delta(const Zonotope& k, const Zonotope& l, const KinematicOptions& options) {
  MCEstimate e = additive_kinematic_delta(k, l.negated(), options);
  e.set_reference(correction_reference(k, l));
  return e;
}

// --------------------------------------------------- intersection integrals

namespace {

// Korobov rank-1 lattice {j (1, a, a^2, ...) / N}: the multiplier maximizes
// the worst-case P_2 figure of merit over a = 2..N-1.
std::vector<long long> korobov_vector(int dim, int points) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(dim, points);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto generator = [&](long long a) {
    std::vector<long long> z(static_cast<std::size_t>(dim), 1);
    for (int i = 1; i < dim; ++i) z[static_cast<std::size_t>(i)] = (z[static_cast<std::size_t>(i - 1)] * a) % points;
    return z;
  };
  std::vector<long long> best = generator(1);
  double best_merit = std::numeric_limits<double>::infinity();
  const long long limit = std::min<long long>(points - 1, 4000);
  for (long long a = 2; a <= limit; ++a) {
    if (std::gcd(a, static_cast<long long>(points)) != 1) continue;
    const auto z = generator(a);
    double merit = 0.0;
    for (int j = 0; j < points; ++j) {
      double prod = 1.0;
      for (int i = 0; i < dim; ++i) {
        const double x = static_cast<double>((j * z[static_cast<std::size_t>(i)]) % points) / points;
        prod *= 1.0 + 2.0 * kPi * kPi * (x * x - x + 1.0 / 6.0);
      }
      merit += prod - 1.0;
      if (merit >= best_merit * points) break;
    }
    merit /= points;
    if (merit < best_merit) {
      best_merit = merit;
      best = z;
    }
  }
  cache.emplace(key, best);
  return best;
}

// Randomly shifted lattice estimate of the integral of f over [lo, hi];
// unbiased for every lattice, the shift being uniform.
template <typename F>
double lattice_integral(int dim, int points, const RVector& lo, const RVector& hi, Rng& rng, F f) {
  const auto z = korobov_vector(dim, points);
  RVector shift(dim);
  for (int i = 0; i < dim; ++i) shift(i) = rng.uniform();
  const RVector width = hi - lo;
  RVector t(dim);
  double sum = 0.0;
  for (int j = 0; j < points; ++j) {
    for (int i = 0; i < dim; ++i) {
      double x = static_cast<double>((static_cast<long long>(j) * z[static_cast<std::size_t>(i)]) % points) / points + shift(i);
      x -= std::floor(x);
      t(i) = lo(i) + width(i) * x;
    }
    sum += f(t);
  }
  return width.prod() * sum / points;
}

class IntersectionIntegrand {
 public:
  IntersectionIntegrand(const Valuation& mu, const Polytope& k, const Polytope& moved)
      : mu_(mu), hk_(k.halfspaces()), hl_(moved.halfspaces()), kmin_(k.bbox_min()), kmax_(k.bbox_max()),
        lmin_(moved.bbox_min()), lmax_(moved.bbox_max()) {}

  double operator()(const RVector& t) const {
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      if (lmin_(i) + t(i) > kmax_(i) || lmax_(i) + t(i) < kmin_(i)) return 0.0;
    }
    std::vector<Halfspace> shifted = hl_;
    for (auto& h : shifted) h.offset += h.normal.dot(t);
    const auto r = intersect_hrep(hk_, shifted);
    if (r.status != Intersection::Status::full) return 0.0;
    return evaluate(mu_, *r.polytope).real();
  }

  RVector lo() const { return kmin_ - lmax_; }
  RVector hi() const { return kmax_ - lmin_; }

 private:
  Valuation mu_;
  std::vector<Halfspace> hk_;
  std::vector<Halfspace> hl_;
  RVector kmin_, kmax_, lmin_, lmax_;
};

void check_reproducing_inputs(const Valuation& mu, const Polytope& k, const Polytope& l) {
  if (k.ambient_dim() != l.ambient_dim() || k.ambient_dim() != 2 * mu.n) {
    fail(ErrorCode::DimensionMismatch, "reproducing_check: bodies must live in R^{2n}");
  }
  if (!k.full_dimensional() || !l.full_dimensional()) {
    fail(ErrorCode::LowerDimensional, "reproducing_check: bodies need half-space representations");
  }
  if (mu.weight != 0 && mu.kind != ValuationKind::phi1 && mu.kind != ValuationKind::phi2) {
    fail(ErrorCode::InvalidArgument, "reproducing_check: unsupported valuation");
  }
}

}  // namespace

MCEstimate reproducing_check(const Valuation& mu, const Polytope& k, const Polytope& l, const ReproducingOptions& options) {
  check_reproducing_inputs(mu, k, l);
  const int n = mu.n;
  const Rng base(options.seed, 0x4e9);
  const RVector zero = RVector::Zero(2 * n);
  const auto per_group = run_chunks<double>(static_cast<std::size_t>(options.groups), options.workers, [&](std::size_t gi) {
    Rng rng = base.split(gi);
    const CMatrix g = sample_special_unitary(n, rng);
    const IntersectionIntegrand f(mu, k, l.transformed(g, zero));
    const RVector pad = RVector::Constant(2 * n, 1e-9);
    return lattice_integral(2 * n, options.translations, f.lo() - pad, f.hi() + pad, rng, f);
  });
  MCEstimate e = from_values(per_group, options.seed);
  e.samples = static_cast<long long>(options.groups) * options.translations;
  const double vk = k.volume();
  const double vl = l.volume();
  if (mu.kind == ValuationKind::vol) {
    e.set_reference(vk * vl);
  } else if (mu.kind == ValuationKind::phi1 || mu.kind == ValuationKind::phi2) {
    e.set_reference(evaluate(mu, k) * vl + vk * evaluate(mu, l));
  }
  return e;
}

MCEstimate kinematic_delta_by_intersection(const Valuation& mu, const Polytope& k, const Polytope& l,
                                           const ReproducingOptions& options) {
  check_reproducing_inputs(mu, k, l);
  const int n = mu.n;
  const Rng base(options.seed, 0xde17a);
  const RVector zero = RVector::Zero(2 * n);
  const auto per_group = run_chunks<double>(static_cast<std::size_t>(options.groups), options.workers, [&](std::size_t gi) {
    Rng rng = base.split(gi);
    const auto pair = coupled_pair(n, rng);
    const IntersectionIntegrand fsu(mu, k, l.transformed(pair.su, zero));
    const IntersectionIntegrand fu(mu, k, l.transformed(pair.u, zero));
    const RVector pad = RVector::Constant(2 * n, 1e-9);
    const RVector lo = fsu.lo().cwiseMin(fu.lo()) - pad;
    const RVector hi = fsu.hi().cwiseMax(fu.hi()) + pad;
    return lattice_integral(2 * n, options.translations, lo, hi, rng, [&](const RVector& t) { return fsu(t) - fu(t); });
  });
  MCEstimate e = from_values(per_group, options.seed);
  e.samples = static_cast<long long>(options.groups) * options.translations;
  if ((mu.kind == ValuationKind::one_k && mu.degree > 0) || mu.kind == ValuationKind::vol) e.set_reference(0.0);
  return e;
}

}  // namespace suval
