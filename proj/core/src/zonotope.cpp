#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "suval/error.hpp"
#include "suval/polytope.hpp"

namespace suval {

namespace {

// Minors of a d x m matrix for every (column set, row set) of equal size,
// by Laplace expansion along the lowest column. Indexed [cols << d | rows].
void all_minors(const RMatrix& a, std::vector<double>& out) {
  const int d = static_cast<int>(a.rows());
  const int m = static_cast<int>(a.cols());
  out.assign(std::size_t{1} << (m + d), 0.0);
  out[0] = 1.0;
  std::vector<unsigned> cols(std::size_t{1} << m);
  std::iota(cols.begin(), cols.end(), 0U);
  std::stable_sort(cols.begin(), cols.end(), [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  for (unsigned c : cols) {
    const int size = std::popcount(c);
    if (size == 0 || size > d) continue;
    const int c0 = std::countr_zero(c);
    const unsigned rest = c & (c - 1);
    for (unsigned r = 0; r < (1U << d); ++r) {
      if (std::popcount(r) != size) continue;
      double sum = 0.0;
      int pos = 0;
      for (unsigned bits = r; bits != 0; bits &= bits - 1, ++pos) {
        const int row = std::countr_zero(bits);
        const double sub = out[(static_cast<std::size_t>(rest) << d) | (r & ~(1U << row))];
        const double term = a(row, c0) * sub;
        sum += (pos % 2 == 0) ? term : -term;
      }
      out[(static_cast<std::size_t>(c) << d) | r] = sum;
    }
  }
}

}  // namespace

double zonotope_volume(std::span<const RVector> generators) {
  if (generators.empty()) return 0.0;
  const auto d = generators.front().size();
  const int m = static_cast<int>(generators.size());
  for (const auto& g : generators) {
    if (g.size() != d) fail(ErrorCode::DimensionMismatch, "zonotope_volume: inconsistent generator dimensions");
  }
  if (m < d) return 0.0;
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  RMatrix block(d, d);
  double total = 0.0;
  while (true) {
    for (Eigen::Index j = 0; j < d; ++j) block.col(j) = generators[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
    total += std::abs(block.determinant());
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - static_cast<int>(d) + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < static_cast<int>(d); ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

Zonotope minkowski_sum_zonotope(const Zonotope& a, const Zonotope& b) {
  if (a.base.size() != b.base.size()) fail(ErrorCode::DimensionMismatch, "minkowski_sum_zonotope: ambient dimensions differ");
  Zonotope z{a.base + b.base, a.generators};
  z.generators.insert(z.generators.end(), b.generators.begin(), b.generators.end());
  return z;
}

Zonotope Zonotope::box(std::span<const double> sides) {
  const auto d = static_cast<Eigen::Index>(sides.size());
  Zonotope z{RVector::Zero(d), {}};
  for (Eigen::Index i = 0; i < d; ++i) {
    RVector g = RVector::Zero(d);
    g(i) = sides[static_cast<std::size_t>(i)];
    z.generators.push_back(g);
  }
  return z;
}

Zonotope Zonotope::transformed(const RMatrix& g) const {
  Zonotope z{g * base, {}};
  for (const auto& v : generators) z.generators.push_back(g * v);
  return z;
}

Zonotope Zonotope::negated() const {
  Zonotope z{-base, {}};
  for (const auto& v : generators) z.generators.push_back(-v);
  return z;
}

Polytope Zonotope::to_polytope() const {
  const auto d = base.size();
  if (generators.size() <= static_cast<std::size_t>(d)) {
    try {
      return Polytope::parallelotope(base, generators);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RankDeficient) throw;
    }
  }
  if (generators.size() > 12) fail(ErrorCode::UnsupportedBody, "to_polytope: too many zonotope generators");
  std::vector<RVector> points;
  for (unsigned mask = 0; mask < (1U << generators.size()); ++mask) {
    RVector v = base;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if ((mask >> i) & 1U) v += generators[i];
    }
    points.push_back(v);
  }
  return Polytope::from_vertices(points);
}

// ------------------------------------------------------------ volume kernel

ZonotopeVolumeKernel::ZonotopeVolumeKernel(std::span<const RVector> fixed_generators, int moving_count)
    : d_(fixed_generators.empty() ? 0 : static_cast<int>(fixed_generators.front().size())),
      mk_(static_cast<int>(fixed_generators.size())),
      ml_(moving_count) {
  if (d_ == 0 || d_ > 8) fail(ErrorCode::UnsupportedDimension, "ZonotopeVolumeKernel: ambient dimension 1..8");
  if (mk_ > 12 || ml_ > 12 || ml_ < 0) fail(ErrorCode::UnsupportedBody, "ZonotopeVolumeKernel: too many generators");
  RMatrix k(d_, mk_);
  for (int j = 0; j < mk_; ++j) {
    if (fixed_generators[static_cast<std::size_t>(j)].size() != d_) fail(ErrorCode::DimensionMismatch, "ZonotopeVolumeKernel: generator dimension");
    k.col(j) = fixed_generators[static_cast<std::size_t>(j)];
  }
  all_minors(k, fixed_minors_);
  for (unsigned s = 0; s < (1U << mk_); ++s) {
    const int ss = std::popcount(s);
    if (ss > d_) continue;
    for (unsigned t = 0; t < (1U << ml_); ++t) {
      if (ss + std::popcount(t) == d_) terms_.push_back({s, t});
    }
  }
  rows_by_size_.assign(static_cast<std::size_t>(d_ + 1), {});
  for (unsigned r = 0; r < (1U << d_); ++r) rows_by_size_[static_cast<std::size_t>(std::popcount(r))].push_back(r);
}

double ZonotopeVolumeKernel::volume(const RMatrix& moving) const {
  if (moving.rows() != d_ || moving.cols() != ml_) fail(ErrorCode::DimensionMismatch, "ZonotopeVolumeKernel: moving generator shape");
  thread_local std::vector<double> moving_minors;
  all_minors(moving, moving_minors);
  const unsigned full = (1U << d_) - 1U;
  double total = 0.0;
  for (const auto& term : terms_) {
    const int ss = std::popcount(term.s_mask);
    const int base_sign = (ss * (ss + 1) / 2) % 2;
    double det = 0.0;
    for (unsigned r : rows_by_size_[static_cast<std::size_t>(ss)]) {
      const double a = fixed_minors_[(static_cast<std::size_t>(term.s_mask) << d_) | r];
      if (a == 0.0) continue;
      const double b = moving_minors[(static_cast<std::size_t>(term.t_mask) << d_) | (full & ~r)];
      int row_sum = 0;
      for (unsigned bits = r; bits != 0; bits &= bits - 1) row_sum += std::countr_zero(bits) + 1;
      det += ((row_sum + base_sign) % 2 == 0) ? a * b : -a * b;
    }
    total += std::abs(det);
  }
  return total;
}

}  // namespace suval
