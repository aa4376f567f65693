#pragma once

// Reference computations that share no code with the polytope engine: closed
// forms and brute-force enumeration over boxes and parallelotopes in C^2.

#include <span>
#include <vector>

#include "suval/numkernel.hpp"

namespace suval::oracle {

/// k-th elementary symmetric polynomial of the side lengths.
double elementary_symmetric(std::span<const double> sides, int k);

/// Theta(W)^2 for the real 2-plane spanned by u, v in R^4 = C^2.
Complex theta_squared_2plane(const RVector& u, const RVector& v);

/// phi_2 of base + sum [0,1] g_i, g_1..g_4 a basis of R^4, by enumerating the
/// 2-faces: the four translates of each face (i, j) have exterior angles
/// summing to 1, so each direction pair contributes area * Theta^2.
Complex phi2_parallelotope(std::span<const RVector> generators);

/// phi_2 of the axis box: enumerates all 24 two-faces with exterior angle 1/4.
Complex phi2_box(std::span<const double> sides);

/// (a1 - a2)(b1 - b2) for box(a1, a2, b1, b2).
double phi2_box_closed_form(std::span<const double> sides);

}  // namespace suval::oracle
