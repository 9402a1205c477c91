#pragma once

#include <vector>

#include "ybx/errors.hpp"
#include "ybx/types.hpp"

namespace ybx {

// Unitary U and upper triangular T with A = U T U*.
struct SchurForm {
  ComplexMatrix U;
  ComplexMatrix T;
};

struct MinNormSolution {
  ComplexMatrix X;
  bool consistent;
};

struct EigenvalueCluster {
  Complex value;       // cluster mean
  Index multiplicity;  // number of Schur diagonal entries absorbed
};

// Threshold below which singular values of A count as zero:
// factor * eps * sigma_max, factor defaulting to max(rows, cols).
double rank_threshold(const ComplexMatrix& A, const ToleranceConfig& cfg = {});

Index rank(const ComplexMatrix& A, const ToleranceConfig& cfg = {});

// Moore-Penrose pseudoinverse via SVD with truncation at rank_threshold.
ComplexMatrix pinv(const ComplexMatrix& A, const ToleranceConfig& cfg = {});

ComplexMatrix matrix_power(const ComplexMatrix& A, Index k);

// Smallest l >= 0 with rank(A^l) == rank(A^{l+1}); rank(A^0) = n by
// convention. Power ranks are thresholded at factor*eps*sigma_max(A)^k so
// that fp junk in high powers of nilpotent matrices does not register as
// rank.
Index matrix_index(const ComplexMatrix& A, const ToleranceConfig& cfg = {});

// Drazin inverse A^D = A^l (A^{2l+1})^+ A^l with l = matrix_index(A).
ComplexMatrix drazin(const ComplexMatrix& A, const ToleranceConfig& cfg = {});

SchurForm schur_complex(const ComplexMatrix& A);

// Reorders a complex Schur form by adjacent unitary swaps so that the
// diagonal entries with keep[i] == true occupy the top-left block, preserving
// the relative order within each group. keep refers to positions in F.T.
SchurForm ordschur_select(const SchurForm& F, const std::vector<bool>& keep);

// Matrix sign function via Schur triangularization: reorder the right-half-
// plane eigenvalues first, then solve the triangular Sylvester equation
// T11 W - W T22 = 2 T12 so that sign(T) = [[I, W], [0, -I]].
// Throws ImaginaryAxisEigenvalue if any eigenvalue has |Re| within
// imag_axis_tol * max(1, ||A||_F) of zero.
ComplexMatrix matrix_sign(const ComplexMatrix& A, const ToleranceConfig& cfg = {});

// Orthonormal basis (columns) of the numerical nullspace, from the right
// singular vectors past the rank threshold.
ComplexMatrix nullspace_basis(const ComplexMatrix& A, const ToleranceConfig& cfg = {});

// Minimum-norm least-squares solution of C X = D, with a consistency flag
// ||C X - D|| <= residual_tol * (||C|| ||X|| + ||D||).
MinNormSolution min_norm_solve(const ComplexMatrix& C, const ComplexMatrix& D,
                               const ToleranceConfig& cfg = {});

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B);

// Single-linkage clustering of the Schur diagonal at threshold
// eig_cluster_tol * max(1, ||A||_F). Clusters are returned sorted by
// (|value| ascending, then arg(value)); the last entry is the lambda_s
// convention used elsewhere.
std::vector<EigenvalueCluster> distinct_eigenvalues(const ComplexMatrix& A,
                                                    const ToleranceConfig& cfg = {});

}  // namespace ybx
