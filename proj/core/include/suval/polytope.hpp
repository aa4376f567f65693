#pragma once

// Convex polytopes in R^{2n}: vertex/facet representations, the face lattice,
// face volumes, exterior angles, zonotopes and pairwise intersection.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "suval/numkernel.hpp"
#include "suval/rng.hpp"

namespace suval {

/// The half-space <normal, x> <= offset with a unit normal.
struct Halfspace {
  RVector normal;
  double offset = 0.0;
};

enum class AngleMethod { automatic, exact, monte_carlo };

struct AngleOptions {
  AngleMethod method = AngleMethod::automatic;
  int mc_samples = 200000;
  std::uint64_t seed = 0x5eedf00dULL;
  unsigned workers = 0;
};

struct AngleEstimate {
  double value = 0.0;
  double std_error = 0.0;
  bool exact = true;
};

struct Face {
  int dim = 0;
  std::vector<int> vertices;  // indices into Polytope::vertices()
  RMatrix basis;              // orthonormal basis of the linear space parallel to the face
  double volume = 0.0;        // dim-dimensional volume
  double exterior_angle = 0.0;
  double angle_stderr = 0.0;
  bool angle_exact = true;
};

struct Intersection;

class Polytope {
 public:
  /// Convex hull of a point set. Intrinsic dimension at most 4 (brute-force
  /// facet search); throws UnsupportedDimension beyond that.
  static Polytope from_vertices(std::span<const RVector> points);
  /// Bounded intersection of half-spaces, vertex enumeration over all
  /// d-subsets. Throws DegeneratePolytope if empty or unbounded-looking,
  /// LowerDimensional if the set is not full-dimensional.
  static Polytope from_halfspaces(std::span<const Halfspace> halfspaces);
  /// base + sum_i [0,1] g_i for linearly independent generators (any count
  /// up to the ambient dimension).
  static Polytope parallelotope(const RVector& base, std::span<const RVector> generators);
  /// Axis box [0, s_1] x ... x [0, s_d].
  static Polytope box(std::span<const double> sides);
  /// conv(0, e_1, ..., e_d).
  static Polytope standard_simplex(int d);

  int ambient_dim() const noexcept { return static_cast<int>(origin_.size()); }
  int dim() const noexcept { return static_cast<int>(affine_basis_.cols()); }
  const std::vector<RVector>& vertices() const noexcept { return vertices_; }
  /// Orthonormal basis of the linear space parallel to aff(P).
  const RMatrix& affine_basis() const noexcept { return affine_basis_; }
  /// Facet inequalities; only for full-dimensional polytopes.
  std::vector<Halfspace> halfspaces() const;
  bool full_dimensional() const noexcept { return dim() == ambient_dim(); }

  /// Number of faces of each dimension 0..dim().
  std::vector<int> f_vector() const;
  /// All k-faces with volumes and exterior angles.
  std::vector<Face> faces(int k, const AngleOptions& options = {}) const;
  /// Exterior angle of a face given by its vertex indices.
  AngleEstimate exterior_angle(std::span<const int> face_vertices, AngleMethod method,
                               const AngleOptions& options = {}) const;
  /// dim()-dimensional volume of P.
  double intrinsic_volume_top() const;
  /// 2n-dimensional volume (0 if lower-dimensional).
  double volume() const;

  /// Image under x -> g x + t with g orthogonal.
  Polytope transformed(const RMatrix& g, const RVector& t) const;
  /// Image under a unitary map of C^n followed by a translation.
  Polytope transformed(const CMatrix& g, const RVector& t) const;
  Polytope translated(const RVector& t) const;
  /// s P for s > 0, or -P for s = -1 (any nonzero s).
  Polytope scaled(double s) const;

  RVector bbox_min() const;
  RVector bbox_max() const;

 private:
  struct Facet {
    std::vector<int> vertices;
    RVector normal;  // unit, inside the linear span of aff(P), outward
    double offset = 0.0;
  };
  struct LatticeNode {
    std::vector<int> vertices;
    std::vector<int> facets;  // indices of facets containing this face
    int dim = 0;
    RMatrix basis;
  };

  friend Intersection intersect_hrep(std::span<const Halfspace> p, std::span<const Halfspace> q);

  Polytope() = default;
  void build_lattice();
  int node_index(std::span<const int> face_vertices) const;
  double node_volume(int node, std::vector<double>& memo) const;
  AngleEstimate node_angle(int node, AngleMethod method, const AngleOptions& options) const;
  static Polytope from_affine_points(std::span<const RVector> points);

  std::vector<RVector> vertices_;
  RVector origin_;
  RMatrix affine_basis_;
  std::vector<Facet> facets_;
  std::vector<LatticeNode> lattice_;
  std::vector<std::vector<int>> by_dim_;  // lattice node indices grouped by dimension
  std::vector<std::vector<int>> children_;  // codimension-one subfaces of each node
};

/// Orthonormal basis of span(differences of `points` from their first entry);
/// the column count is the affine dimension.
RMatrix affine_span_basis(std::span<const RVector> points, double tol = 1e-9);

// ----------------------------------------------------------------- zonotopes

struct Zonotope {
  RVector base;
  std::vector<RVector> generators;

  int ambient_dim() const { return static_cast<int>(base.size()); }
  /// Axis box with the given side lengths at the origin.
  static Zonotope box(std::span<const double> sides);
  Zonotope transformed(const RMatrix& g) const;
  Zonotope negated() const;
  /// Polytope with the same point set (parallelotopes: direct; general
  /// zonotopes: hull of all generator sums, intrinsic dimension <= 4).
  Polytope to_polytope() const;
};

/// Sum over all d-subsets of |det|, d the ambient dimension.
double zonotope_volume(std::span<const RVector> generators);
Zonotope minkowski_sum_zonotope(const Zonotope& a, const Zonotope& b);

/// vol(K + M) for a fixed zonotope K and varying generator sets M of fixed
/// size, by Laplace expansion against precomputed minors of K.
class ZonotopeVolumeKernel {
 public:
  ZonotopeVolumeKernel(std::span<const RVector> fixed_generators, int moving_count);
  double volume(const RMatrix& moving) const;  // moving generators as columns

 private:
  int d_;
  int mk_;
  int ml_;
  std::vector<double> fixed_minors_;  // [colmask][rowmask]
  struct Term {
    unsigned s_mask;
    unsigned t_mask;
  };
  std::vector<Term> terms_;
  std::vector<std::vector<unsigned>> rows_by_size_;
};

// -------------------------------------------------------------- intersection

struct Intersection {
  enum class Status { empty, lower_dimensional, full };
  Status status = Status::empty;
  std::optional<Polytope> polytope;
};

/// P cap Q for full-dimensional polytopes given by half-spaces.
Intersection intersect_hrep(const Polytope& p, const Polytope& q);
Intersection intersect_hrep(std::span<const Halfspace> p, std::span<const Halfspace> q);

}  // namespace suval
