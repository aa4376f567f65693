#pragma once

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "suval/error.hpp"
#include "suval/grassmann.hpp"

#define EXPECT_SUVAL_ERROR(stmt, expected_code)                                  \
  do {                                                                           \
    try {                                                                        \
      stmt;                                                                      \
      ADD_FAILURE() << "expected " << ::suval::to_string(expected_code);         \
    } catch (const ::suval::Error& e) {                                          \
      EXPECT_EQ(e.code(), expected_code) << e.what();                            \
    }                                                                            \
  } while (0)

namespace suval::test {

inline RVector unit(int d, int i) { return RVector::Unit(d, i); }

inline RVector vec(std::initializer_list<double> xs) {
  RVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

/// span{e1, cos(t) i e1 + sin(t) e2} in C^2.
inline Subspace w_theta(double t) {
  return Subspace::from_spanning(2, [&] {
    RMatrix m = RMatrix::Zero(4, 2);
    m(0, 0) = 1.0;
    m(1, 1) = std::cos(t);
    m(2, 1) = std::sin(t);
    return m;
  }());
}

inline Subspace span_real(int n, std::vector<RVector> vs) {
  RMatrix m(2 * n, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i];
  return Subspace::from_spanning(n, m);
}

inline RMatrix random_real(int d, Rng& rng) {
  RMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = rng.normal();
  return m;
}

}  // namespace suval::test
