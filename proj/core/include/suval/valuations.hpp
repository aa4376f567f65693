#pragma once

// SU(n)-invariant valuations evaluated on polytopes through their Klain
// functions: mu(P) = sum over k-faces F of gamma(F) vol(F) kl(W_F).

#include <string>
#include <string_view>

#include "suval/grassmann.hpp"
#include "suval/polytope.hpp"

namespace suval {

enum class ValuationKind { euler, one_k, vol, phi1, phi2, phi1_bar, phi2_bar };

struct Valuation {
  ValuationKind kind = ValuationKind::euler;
  int n = 2;
  int degree = 0;
  int weight = 0;
  Complex scale = 1.0;

  /// `k` is only used by one_k.
  static Valuation make(ValuationKind kind, int n, int k = -1);
  /// "euler", "vol", "one_2", "phi1", "phi2", "phi1_bar", "phi2_bar".
  static Valuation parse(std::string_view name, int n);
  std::string name() const;
};

/// Theta(W)^2.
Complex klain_phi2(const Subspace& w);
/// Theta(W) * prod cos(theta_j(W)); n even.
Complex klain_phi1(const Subspace& w);
/// Klain value of `val` on a subspace of dimension val.degree.
Complex klain(const Valuation& val, const Subspace& w);

struct Evaluation {
  Complex value;
  double std_error = 0.0;  // nonzero only if some exterior angle was sampled
  bool exact = true;
};

Evaluation evaluate_detailed(const Valuation& val, const Polytope& p, const AngleOptions& options = {});
Complex evaluate(const Valuation& val, const Polytope& p, const AngleOptions& options = {});

/// |mu(gP) - det(g)^l mu(P)| <= tol (1 + |mu(P)|).
bool check_weight(const Valuation& val, const Polytope& p, const CMatrix& g, double tol);

/// Coefficient c with val1 . val2 = c vol, for val1, val2 among phi1, phi2
/// and their conjugates. Zero when the weights do not cancel.
Complex product_middle(ValuationKind val1, ValuationKind val2, int n);

/// dim Val^{SU(n)} and dim Val^{U(n)}, n >= 2.
int dimension_su(int n);
int dimension_u(int n);

}  // namespace suval
