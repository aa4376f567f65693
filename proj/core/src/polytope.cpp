#include "suval/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "suval/error.hpp"
#include "suval/parallel.hpp"

namespace suval {

namespace {

double point_scale(std::span<const RVector> points) {
  double s = 1.0;
  for (const auto& p : points) s = std::max(s, p.cwiseAbs().maxCoeff());
  return s;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_sorted(const std::vector<int>& outer, const std::vector<int>& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// Orthonormal basis of the column span, rank decided relative to `scale`.
RMatrix column_span_basis(const RMatrix& m, double tol) {
  if (m.cols() == 0) return RMatrix(m.rows(), 0);
  Eigen::ColPivHouseholderQR<RMatrix> qr(m);
  qr.setThreshold(tol);
  const auto rank = qr.rank();
  RMatrix q = qr.householderQ() * RMatrix::Identity(m.rows(), rank);
  return q;
}

template <typename F>
void for_each_combination(int n, int k, F f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<RVector> dedupe_points(std::span<const RVector> points, double tol) {
  std::vector<RVector> out;
  for (const auto& p : points) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const RVector& q) { return (p - q).norm() <= tol; });
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace

RMatrix affine_span_basis(std::span<const RVector> points, double tol) {
  if (points.empty()) fail(ErrorCode::DegeneratePolytope, "affine_span_basis: no points");
  const auto d = points.front().size();
  RMatrix diffs(d, static_cast<Eigen::Index>(points.size()) - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.col(static_cast<Eigen::Index>(i) - 1) = points[i] - points[0];
  return column_span_basis(diffs, tol * point_scale(points));
}

// ------------------------------------------------------------ constructors

Polytope Polytope::from_vertices(std::span<const RVector> points) {
  if (points.empty()) fail(ErrorCode::DegeneratePolytope, "from_vertices: empty point set");
  const auto d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) fail(ErrorCode::DimensionMismatch, "from_vertices: inconsistent point dimensions");
  }
  return from_affine_points(points);
}

Polytope Polytope::from_affine_points(std::span<const RVector> input) {
  const double scale = point_scale(input);
  const double tol = 1e-9 * scale;
  std::vector<RVector> points = dedupe_points(input, tol);
  Polytope p;
  p.origin_ = points.front();
  p.affine_basis_ = affine_span_basis(points);
  const int dim = p.dim();
  if (dim > 4) fail(ErrorCode::UnsupportedDimension, "from_vertices: hull supported up to intrinsic dimension 4");

  if (dim == 0) {
    p.vertices_ = {points.front()};
    p.build_lattice();
    return p;
  }

  const int m = static_cast<int>(points.size());
  std::vector<RVector> y;
  y.reserve(points.size());
  for (const auto& x : points) y.push_back(p.affine_basis_.transpose() * (x - p.origin_));

  std::map<std::vector<int>, RVector> found;  // vertex set -> outward normal (intrinsic)
  for_each_combination(m, dim, [&](const std::vector<int>& subset) {
    RVector normal(dim);
    if (dim == 1) {
      normal(0) = 1.0;
    } else {
      RMatrix diffs(dim - 1, dim);
      for (int r = 1; r < dim; ++r) diffs.row(r - 1) = (y[static_cast<std::size_t>(subset[static_cast<std::size_t>(r)])] - y[static_cast<std::size_t>(subset[0])]).transpose();
      Eigen::JacobiSVD<RMatrix> svd(diffs, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      if (sv(dim - 2) <= tol) return;
      normal = svd.matrixV().col(dim - 1);
    }
    const double c = normal.dot(y[static_cast<std::size_t>(subset[0])]);
    double lo = 0.0;
    double hi = 0.0;
    std::vector<int> on;
    for (int i = 0; i < m; ++i) {
      const double v = normal.dot(y[static_cast<std::size_t>(i)]) - c;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (std::abs(v) <= tol) on.push_back(i);
    }
    if (hi <= tol) found.emplace(on, normal);
    else if (lo >= -tol) found.emplace(on, -normal);
  });

  // Keep only true facets (incident set of affine dimension dim-1).
  std::vector<std::pair<std::vector<int>, RVector>> facets;
  for (auto& [verts, normal] : found) {
    std::vector<RVector> pts;
    for (int i : verts) pts.push_back(y[static_cast<std::size_t>(i)]);
    if (affine_span_basis(pts).cols() == dim - 1) facets.emplace_back(verts, normal);
  }
  if (static_cast<int>(facets.size()) < dim + 1) fail(ErrorCode::DegeneratePolytope, "from_vertices: too few facets");

  // Extreme points: incident facet normals span the intrinsic space.
  std::vector<int> remap(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    RMatrix normals(dim, 0);
    for (const auto& [verts, normal] : facets) {
      if (std::binary_search(verts.begin(), verts.end(), i)) {
        normals.conservativeResize(Eigen::NoChange, normals.cols() + 1);
        normals.col(normals.cols() - 1) = normal;
      }
    }
    if (column_span_basis(normals, 1e-9).cols() == dim) {
      remap[static_cast<std::size_t>(i)] = static_cast<int>(p.vertices_.size());
      p.vertices_.push_back(points[static_cast<std::size_t>(i)]);
    }
  }
  for (const auto& [verts, normal] : facets) {
    Facet f;
    for (int i : verts) {
      if (remap[static_cast<std::size_t>(i)] >= 0) f.vertices.push_back(remap[static_cast<std::size_t>(i)]);
    }
    f.normal = p.affine_basis_ * normal;
    f.offset = f.normal.dot(p.vertices_[static_cast<std::size_t>(f.vertices.front())]);
    p.facets_.push_back(std::move(f));
  }
  p.origin_ = p.vertices_.front();
  p.build_lattice();
  return p;
}

namespace {

std::vector<RVector> hrep_vertices(std::span<const Halfspace> hs, double tol) {
  const int d = static_cast<int>(hs.front().normal.size());
  const int m = static_cast<int>(hs.size());
  std::vector<RVector> out;
  auto feasible = [&](const RVector& x) {
    return std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.normal.dot(x) <= h.offset + tol; });
  };
  if (d == 4) {
    for_each_combination(m, 4, [&](const std::vector<int>& s) {
      Eigen::Matrix4d a;
      Eigen::Vector4d b;
      for (int r = 0; r < 4; ++r) {
        a.row(r) = hs[static_cast<std::size_t>(s[static_cast<std::size_t>(r)])].normal.transpose();
        b(r) = hs[static_cast<std::size_t>(s[static_cast<std::size_t>(r)])].offset;
      }
      Eigen::Matrix4d inv;
      double det = 0.0;
      bool ok = false;
      a.computeInverseAndDetWithCheck(inv, det, ok, 1e-12);
      if (!ok) return;
      const RVector x = inv * b;
      if (feasible(x)) out.push_back(x);
    });
  } else {
    for_each_combination(m, d, [&](const std::vector<int>& s) {
      RMatrix a(d, d);
      RVector b(d);
      for (int r = 0; r < d; ++r) {
        a.row(r) = hs[static_cast<std::size_t>(s[static_cast<std::size_t>(r)])].normal.transpose();
        b(r) = hs[static_cast<std::size_t>(s[static_cast<std::size_t>(r)])].offset;
      }
      Eigen::FullPivLU<RMatrix> lu(a);
      lu.setThreshold(1e-12);
      if (lu.rank() < d) return;
      const RVector x = lu.solve(b);
      if (feasible(x)) out.push_back(x);
    });
  }
  return dedupe_points(out, tol);
}

std::vector<Halfspace> normalized(std::span<const Halfspace> hs) {
  if (hs.empty()) fail(ErrorCode::DegeneratePolytope, "halfspace list is empty");
  const auto d = hs.front().normal.size();
  std::vector<Halfspace> out;
  for (const auto& h : hs) {
    if (h.normal.size() != d) fail(ErrorCode::DimensionMismatch, "halfspaces: inconsistent normal dimensions");
    const double norm = h.normal.norm();
    if (norm == 0.0) fail(ErrorCode::InvalidArgument, "halfspaces: zero normal");
    out.push_back({h.normal / norm, h.offset / norm});
  }
  return out;
}

}  // namespace

Polytope Polytope::from_halfspaces(std::span<const Halfspace> input) {
  if (input.empty()) fail(ErrorCode::DegeneratePolytope, "from_halfspaces: no half-spaces");
  // Bounded iff the recession cone {x : <n_i, x> <= 0} is {0}; truncated to
  // the unit cube its vertices must then all be the origin.
  const int d = static_cast<int>(input.front().normal.size());
  std::vector<Halfspace> cone;
  for (const auto& h : input) cone.push_back({h.normal, 0.0});
  for (int i = 0; i < d; ++i) {
    cone.push_back({RVector::Unit(d, i), 1.0});
    cone.push_back({-RVector::Unit(d, i), 1.0});
  }
  for (const auto& v : hrep_vertices(normalized(cone), 1e-9)) {
    if (v.norm() > 1e-7) fail(ErrorCode::DegeneratePolytope, "from_halfspaces: set is unbounded");
  }
  auto r = intersect_hrep(input, {});
  if (r.status == Intersection::Status::empty) fail(ErrorCode::DegeneratePolytope, "from_halfspaces: empty set");
  if (r.status == Intersection::Status::lower_dimensional) {
    fail(ErrorCode::LowerDimensional, "from_halfspaces: set is not full-dimensional");
  }
  return std::move(*r.polytope);
}

Intersection intersect_hrep(const Polytope& p, const Polytope& q) {
  const auto hp = p.halfspaces();
  const auto hq = q.halfspaces();
  if (p.ambient_dim() != q.ambient_dim()) fail(ErrorCode::DimensionMismatch, "intersect_hrep: ambient dimensions differ");
  return intersect_hrep(hp, hq);
}

Intersection intersect_hrep(std::span<const Halfspace> p, std::span<const Halfspace> q) {
  std::vector<Halfspace> all(p.begin(), p.end());
  all.insert(all.end(), q.begin(), q.end());
  all = normalized(all);
  const int d = static_cast<int>(all.front().normal.size());
  double scale = 1.0;
  for (const auto& h : all) scale = std::max(scale, std::abs(h.offset));
  const double tol = 1e-9 * scale;

  Intersection result;
  const auto verts = hrep_vertices(all, tol);
  if (verts.empty()) return result;
  const RMatrix basis = affine_span_basis(verts);
  if (basis.cols() < d) {
    result.status = Intersection::Status::lower_dimensional;
    return result;
  }

  Polytope poly;
  poly.vertices_ = verts;
  poly.origin_ = verts.front();
  poly.affine_basis_ = RMatrix::Identity(d, d);
  std::map<std::vector<int>, std::size_t> seen;
  for (const auto& h : all) {
    std::vector<int> on;
    std::vector<RVector> pts;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      if (std::abs(h.normal.dot(verts[static_cast<std::size_t>(i)]) - h.offset) <= tol) {
        on.push_back(i);
        pts.push_back(verts[static_cast<std::size_t>(i)]);
      }
    }
    if (static_cast<int>(on.size()) < d || seen.count(on) != 0) continue;
    if (affine_span_basis(pts).cols() != d - 1) continue;
    seen.emplace(on, poly.facets_.size());
    poly.facets_.push_back({on, h.normal, h.offset});
  }
  poly.build_lattice();
  result.status = Intersection::Status::full;
  result.polytope = std::move(poly);
  return result;
}

Polytope Polytope::parallelotope(const RVector& base, std::span<const RVector> generators) {
  const auto d = base.size();
  const int k = static_cast<int>(generators.size());
  if (k > static_cast<int>(d)) fail(ErrorCode::RankDeficient, "parallelotope: more generators than dimensions");
  if (k > 16) fail(ErrorCode::UnsupportedDimension, "parallelotope: too many generators");
  RMatrix g(d, k);
  for (int i = 0; i < k; ++i) {
    if (generators[static_cast<std::size_t>(i)].size() != d) fail(ErrorCode::DimensionMismatch, "parallelotope: generator dimension");
    g.col(i) = generators[static_cast<std::size_t>(i)];
  }
  Polytope p;
  p.origin_ = base;
  if (k > 0) {
    Eigen::JacobiSVD<RMatrix> svd(g);
    const auto& sv = svd.singularValues();
    if (sv(k - 1) <= kRankTolerance * sv(0)) fail(ErrorCode::RankDeficient, "parallelotope: dependent generators");
  }
  p.affine_basis_ = column_span_basis(g, 0.0);
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    RVector v = base;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) v += g.col(i);
    }
    p.vertices_.push_back(v);
  }
  if (k > 0) {
    const RMatrix dual = g * (g.transpose() * g).inverse();
    for (int i = 0; i < k; ++i) {
      const RVector n = dual.col(i).normalized();
      for (int side = 0; side < 2; ++side) {
        Facet f;
        for (unsigned mask = 0; mask < (1U << k); ++mask) {
          if (static_cast<int>((mask >> i) & 1U) == side) f.vertices.push_back(static_cast<int>(mask));
        }
        f.normal = side == 1 ? n : RVector(-n);
        f.offset = f.normal.dot(p.vertices_[static_cast<std::size_t>(f.vertices.front())]);
        p.facets_.push_back(std::move(f));
      }
    }
  }
  p.build_lattice();
  return p;
}

Polytope Polytope::box(std::span<const double> sides) {
  const auto d = static_cast<Eigen::Index>(sides.size());
  std::vector<RVector> gens;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (sides[static_cast<std::size_t>(i)] <= 0.0) fail(ErrorCode::InvalidArgument, "box: side lengths must be positive");
    RVector g = RVector::Zero(d);
    g(i) = sides[static_cast<std::size_t>(i)];
    gens.push_back(g);
  }
  return parallelotope(RVector::Zero(d), gens);
}

Polytope Polytope::standard_simplex(int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "standard_simplex: d >= 1");
  Polytope p;
  p.vertices_.push_back(RVector::Zero(d));
  for (int i = 0; i < d; ++i) p.vertices_.push_back(RVector::Unit(d, i));
  p.origin_ = p.vertices_.front();
  p.affine_basis_ = RMatrix::Identity(d, d);
  for (int omit = 0; omit <= d; ++omit) {
    Facet f;
    for (int v = 0; v <= d; ++v) {
      if (v != omit) f.vertices.push_back(v);
    }
    if (omit == 0) {
      f.normal = RVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
    } else {
      f.normal = -RVector::Unit(d, omit - 1);
    }
    f.offset = f.normal.dot(p.vertices_[static_cast<std::size_t>(f.vertices.front())]);
    p.facets_.push_back(std::move(f));
  }
  p.build_lattice();
  return p;
}

// ----------------------------------------------------------------- lattice

void Polytope::build_lattice() {
  lattice_.clear();
  children_.clear();
  std::map<std::vector<int>, int> index;
  std::vector<int> all(vertices_.size());
  std::iota(all.begin(), all.end(), 0);
  auto add = [&](std::vector<int> verts) -> int {
    auto it = index.find(verts);
    if (it != index.end()) return it->second;
    LatticeNode node;
    std::vector<RVector> pts;
    for (int i : verts) pts.push_back(vertices_[static_cast<std::size_t>(i)]);
    node.basis = affine_span_basis(pts);
    node.dim = static_cast<int>(node.basis.cols());
    node.vertices = std::move(verts);
    const int id = static_cast<int>(lattice_.size());
    index.emplace(node.vertices, id);
    lattice_.push_back(std::move(node));
    children_.emplace_back();
    return id;
  };
  add(all);
  for (std::size_t q = 0; q < lattice_.size(); ++q) {
    for (const auto& f : facets_) {
      auto meet = intersect_sorted(lattice_[q].vertices, f.vertices);
      if (meet.empty() || meet.size() == lattice_[q].vertices.size()) continue;
      const int child = add(std::move(meet));
      if (lattice_[static_cast<std::size_t>(child)].dim == lattice_[q].dim - 1) {
        auto& ch = children_[q];
        if (std::find(ch.begin(), ch.end(), child) == ch.end()) ch.push_back(child);
      }
    }
  }
  by_dim_.assign(static_cast<std::size_t>(dim() + 1), {});
  for (int i = 0; i < static_cast<int>(lattice_.size()); ++i) {
    auto& node = lattice_[static_cast<std::size_t>(i)];
    for (int f = 0; f < static_cast<int>(facets_.size()); ++f) {
      if (contains_sorted(facets_[static_cast<std::size_t>(f)].vertices, node.vertices)) node.facets.push_back(f);
    }
    by_dim_[static_cast<std::size_t>(node.dim)].push_back(i);
  }
}

std::vector<int> Polytope::f_vector() const {
  std::vector<int> out;
  for (const auto& nodes : by_dim_) out.push_back(static_cast<int>(nodes.size()));
  return out;
}

int Polytope::node_index(std::span<const int> face_vertices) const {
  std::vector<int> key(face_vertices.begin(), face_vertices.end());
  std::sort(key.begin(), key.end());
  for (int i = 0; i < static_cast<int>(lattice_.size()); ++i) {
    if (lattice_[static_cast<std::size_t>(i)].vertices == key) return i;
  }
  fail(ErrorCode::BadIndex, "exterior_angle: vertex set is not a face of the polytope");
}

double Polytope::node_volume(int node, std::vector<double>& memo) const {
  auto& slot = memo[static_cast<std::size_t>(node)];
  if (slot >= 0.0) return slot;
  const auto& x = lattice_[static_cast<std::size_t>(node)];
  double vol = 0.0;
  if (x.dim == 0) {
    vol = 1.0;
  } else if (x.dim == 1) {
    double len = 0.0;
    for (int i : x.vertices) len = std::max(len, (vertices_[static_cast<std::size_t>(i)] - vertices_[static_cast<std::size_t>(x.vertices.front())]).norm());
    vol = len;
  } else {
    RVector centroid = RVector::Zero(ambient_dim());
    for (int i : x.vertices) centroid += vertices_[static_cast<std::size_t>(i)];
    centroid /= static_cast<double>(x.vertices.size());
    for (int c : children_[static_cast<std::size_t>(node)]) {
      const auto& g = lattice_[static_cast<std::size_t>(c)];
      RVector r = centroid - vertices_[static_cast<std::size_t>(g.vertices.front())];
      r -= g.basis * (g.basis.transpose() * r);
      vol += r.norm() * node_volume(c, memo);
    }
    vol /= x.dim;
  }
  slot = vol;
  return vol;
}

double Polytope::intrinsic_volume_top() const {
  std::vector<double> memo(lattice_.size(), -1.0);
  return node_volume(0, memo);
}

double Polytope::volume() const { return full_dimensional() ? intrinsic_volume_top() : 0.0; }

AngleEstimate Polytope::node_angle(int node, AngleMethod method, const AngleOptions& options) const {
  const auto& x = lattice_[static_cast<std::size_t>(node)];
  const int codim = dim() - x.dim;
  if (codim == 0) return {1.0, 0.0, true};
  if (codim == 1) return {0.5, 0.0, true};
  if (method != AngleMethod::monte_carlo) {
    const auto& fs = x.facets;
    if (codim == 2 && fs.size() == 2) {
      const double c = std::clamp(facets_[static_cast<std::size_t>(fs[0])].normal.dot(facets_[static_cast<std::size_t>(fs[1])].normal), -1.0, 1.0);
      return {std::acos(c) / (2.0 * kPi), 0.0, true};
    }
    if (static_cast<int>(fs.size()) == codim) {
      RMatrix gram(codim, codim);
      for (int a = 0; a < codim; ++a) {
        for (int b = 0; b < codim; ++b) {
          gram(a, b) = facets_[static_cast<std::size_t>(fs[static_cast<std::size_t>(a)])].normal.dot(facets_[static_cast<std::size_t>(fs[static_cast<std::size_t>(b)])].normal);
        }
      }
      if ((gram - RMatrix::Identity(codim, codim)).cwiseAbs().maxCoeff() <= 1e-12) {
        return {std::ldexp(1.0, -codim), 0.0, true};
      }
      if (codim == 3) {
        // Solid angle of the simplicial cone spanned by three unit normals.
        const double triple = std::sqrt(std::max(0.0, gram.determinant()));
        const double omega = 2.0 * std::atan2(triple, 1.0 + gram(0, 1) + gram(1, 2) + gram(0, 2));
        return {omega / (4.0 * kPi), 0.0, true};
      }
    }
    if (method == AngleMethod::exact) {
      fail(ErrorCode::ExactUnavailable, "exterior_angle: no closed form for this normal cone");
    }
  }

  // Monte Carlo over the unit sphere of the normal space of the face.
  RMatrix normal_space = affine_basis_ - x.basis * (x.basis.transpose() * affine_basis_);
  normal_space = column_span_basis(normal_space, 1e-9);
  std::vector<RVector> others;
  const RVector& anchor = vertices_[static_cast<std::size_t>(x.vertices.front())];
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!std::binary_search(x.vertices.begin(), x.vertices.end(), i)) {
      others.push_back(normal_space.transpose() * (vertices_[static_cast<std::size_t>(i)] - anchor));
    }
  }
  constexpr std::size_t kChunks = 16;
  const int samples = std::max(options.mc_samples, 1);
  std::uint64_t key = 0;
  for (int v : x.vertices) key = splitmix64(key ^ static_cast<std::uint64_t>(v));
  const Rng base = Rng(options.seed, key);
  const auto hits = run_chunks<long long>(kChunks, options.workers, [&](std::size_t chunk) {
    Rng rng = base.split(chunk);
    long long count = 0;
    for (int s = static_cast<int>(chunk); s < samples; s += static_cast<int>(kChunks)) {
      RVector u(codim);
      for (int j = 0; j < codim; ++j) u(j) = rng.normal();
      const bool inside = std::all_of(others.begin(), others.end(), [&](const RVector& w) { return u.dot(w) < 0.0; });
      count += inside ? 1 : 0;
    }
    return count;
  });
  const double p = static_cast<double>(std::accumulate(hits.begin(), hits.end(), 0LL)) / samples;
  return {p, std::sqrt(p * (1.0 - p) / samples), false};
}

AngleEstimate Polytope::exterior_angle(std::span<const int> face_vertices, AngleMethod method,
                                       const AngleOptions& options) const {
  return node_angle(node_index(face_vertices), method, options);
}

std::vector<Face> Polytope::faces(int k, const AngleOptions& options) const {
  std::vector<Face> out;
  if (k < 0 || k > dim()) return out;
  std::vector<double> memo(lattice_.size(), -1.0);
  for (int id : by_dim_[static_cast<std::size_t>(k)]) {
    const auto& node = lattice_[static_cast<std::size_t>(id)];
    const auto angle = node_angle(id, options.method, options);
    out.push_back({node.dim, node.vertices, node.basis, node_volume(id, memo), angle.value, angle.std_error, angle.exact});
  }
  return out;
}

std::vector<Halfspace> Polytope::halfspaces() const {
  if (!full_dimensional()) fail(ErrorCode::LowerDimensional, "halfspaces: polytope is not full-dimensional");
  std::vector<Halfspace> out;
  for (const auto& f : facets_) out.push_back({f.normal, f.offset});
  return out;
}

// ---------------------------------------------------------------- transforms

Polytope Polytope::transformed(const RMatrix& g, const RVector& t) const {
  if (g.rows() != ambient_dim() || g.cols() != ambient_dim() || t.size() != ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "transform: dimension mismatch");
  }
  if (!is_orthogonal(g, 1e-9)) fail(ErrorCode::NotOrthogonal, "transform: matrix is not orthogonal");
  Polytope p = *this;
  for (auto& v : p.vertices_) v = g * v + t;
  p.origin_ = g * origin_ + t;
  p.affine_basis_ = g * affine_basis_;
  for (auto& f : p.facets_) {
    f.normal = g * f.normal;
    f.offset = f.normal.dot(p.vertices_[static_cast<std::size_t>(f.vertices.front())]);
  }
  for (auto& node : p.lattice_) node.basis = g * node.basis;
  return p;
}

Polytope Polytope::transformed(const CMatrix& g, const RVector& t) const {
  if (2 * g.rows() != ambient_dim()) fail(ErrorCode::DimensionMismatch, "transform: unitary size mismatch");
  if (!is_unitary(g, 1e-9)) fail(ErrorCode::NotUnitary, "transform: matrix is not unitary");
  return transformed(realify(g), t);
}

Polytope Polytope::translated(const RVector& t) const {
  return transformed(RMatrix(RMatrix::Identity(ambient_dim(), ambient_dim())), t);
}

Polytope Polytope::scaled(double s) const {
  if (s == 0.0) fail(ErrorCode::InvalidArgument, "scaled: factor must be nonzero");
  Polytope p = *this;
  for (auto& v : p.vertices_) v *= s;
  p.origin_ *= s;
  for (auto& f : p.facets_) {
    if (s < 0.0) f.normal = -f.normal;
    f.offset *= std::abs(s);
  }
  return p;
}

RVector Polytope::bbox_min() const {
  RVector m = vertices_.front();
  for (const auto& v : vertices_) m = m.cwiseMin(v);
  return m;
}

RVector Polytope::bbox_max() const {
  RVector m = vertices_.front();
  for (const auto& v : vertices_) m = m.cwiseMax(v);
  return m;
}

}  // namespace suval
