#include "suval_cli/oracle.hpp"

#include <bit>
#include <cmath>

namespace suval::oracle {

double elementary_symmetric(std::span<const double> sides, int k) {
  const int d = static_cast<int>(sides.size());
  double total = 0.0;
  for (unsigned mask = 0; mask < (1U << d); ++mask) {
    if (std::popcount(mask) != k) continue;
    double p = 1.0;
    for (int i = 0; i < d; ++i) {
      if (mask & (1U << i)) p *= sides[static_cast<std::size_t>(i)];
    }
    total += p;
  }
  return total;
}

Complex theta_squared_2plane(const RVector& u, const RVector& v) {
  // Gram-Schmidt by hand, then the 2x2 complex determinant.
  const RVector e1 = u / u.norm();
  RVector w = v - v.dot(e1) * e1;
  const RVector e2 = w / w.norm();
  const Complex a(e1(0), e1(1));
  const Complex c(e1(2), e1(3));
  const Complex b(e2(0), e2(1));
  const Complex d(e2(2), e2(3));
  const Complex det = a * d - b * c;
  return det * det;
}

Complex phi2_parallelotope(std::span<const RVector> generators) {
  Complex total = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const RVector& g = generators[static_cast<std::size_t>(i)];
      const RVector& h = generators[static_cast<std::size_t>(j)];
      const double area = std::sqrt(g.squaredNorm() * h.squaredNorm() - g.dot(h) * g.dot(h));
      total += area * theta_squared_2plane(g, h);
    }
  }
  return total;
}

Complex phi2_box(std::span<const double> sides) {
  Complex total = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const RVector ei = RVector::Unit(4, i);
      const RVector ej = RVector::Unit(4, j);
      const Complex klain = theta_squared_2plane(ei, ej);
      // Faces parallel to span(e_i, e_j): each remaining coordinate is pinned
      // to 0 or its side length, with normal ray -e or +e, so the normal cone
      // is a quadrant of the 2-plane of pinned coordinates.
      for (int pins = 0; pins < 4; ++pins) {
        const double angle = 0.5 * 0.5;
        total += angle * sides[static_cast<std::size_t>(i)] * sides[static_cast<std::size_t>(j)] * klain;
      }
    }
  }
  return total;
}

double phi2_box_closed_form(std::span<const double> sides) {
  return (sides[0] - sides[1]) * (sides[2] - sides[3]);
}

}  // namespace suval::oracle
