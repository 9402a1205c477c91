#pragma once

#include <vector>

#include "ybx/types.hpp"

namespace ybx {

// Quantitative assessment of a candidate X for A X A = X A X.
// est_rel = residual_norm / (frechet_norm * ||X||), with +infinity when the
// denominator vanishes (X = 0 or a zero linearization) so batch runs never
// abort on degenerate cells.
struct VerificationReport {
  double residual_norm = 0.0;  // ||A X A - X A X||_F
  double frechet_norm = 0.0;   // ||M(X)||_F
  double est_rel = 0.0;
  bool is_solution = false;
};

// R(X) = A X A - X A X.
ComplexMatrix residual(const ComplexMatrix& A, const ComplexMatrix& X);

// Linearization of R at X under column-stacking vec:
//   M(X) = A^T (x) A - I (x) (X A) - (A X)^T (x) I,
// size n^2 x n^2. The transposes are PLAIN transposes, not conjugate ones:
// vec(P Y Q) = (Q^T (x) P) vec(Y) holds with the unconjugated Q^T even for
// complex matrices, and using adjoints here would break the
// finite-difference identity vec(R(X + hE) - R(X))/h -> M(X) vec(E).
ComplexMatrix frechet_operator(const ComplexMatrix& A, const ComplexMatrix& X);

// Report with the relative-error estimate and the solution flag
// ||R(X)|| <= residual_tol * max(1, ||A||)^2 * max(1, ||X||).
VerificationReport est_rel(const ComplexMatrix& A, const ComplexMatrix& X,
                           const ToleranceConfig& cfg = {});

bool is_solution(const ComplexMatrix& A, const ComplexMatrix& X,
                 const ToleranceConfig& cfg = {});

// True iff all pairwise Frobenius distances exceed threshold.
bool pairwise_distinct(const std::vector<ComplexMatrix>& list, double threshold);

}  // namespace ybx
