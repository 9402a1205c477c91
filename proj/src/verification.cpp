#include "ybx/verification.hpp"

#include <limits>

#include "ybx/linalg.hpp"

namespace ybx {

ComplexMatrix residual(const ComplexMatrix& A, const ComplexMatrix& X) {
  return A * X * A - X * A * X;
}

ComplexMatrix frechet_operator(const ComplexMatrix& A, const ComplexMatrix& X) {
  const Index n = A.rows();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  return kron(A.transpose(), A) - kron(Id, X * A) -
         kron((A * X).transpose(), Id);
}

VerificationReport est_rel(const ComplexMatrix& A, const ComplexMatrix& X,
                           const ToleranceConfig& cfg) {
  VerificationReport report;
  report.residual_norm = frob(residual(A, X));
  report.frechet_norm = frob(frechet_operator(A, X));
  const double denom = report.frechet_norm * frob(X);
  report.est_rel = denom > 0.0
                       ? report.residual_norm / denom
                       : std::numeric_limits<double>::infinity();
  report.is_solution =
      report.residual_norm <= cfg.residual_tol * solution_scale(A, X);
  return report;
}

bool is_solution(const ComplexMatrix& A, const ComplexMatrix& X,
                 const ToleranceConfig& cfg) {
  return frob(residual(A, X)) <= cfg.residual_tol * solution_scale(A, X);
}

bool pairwise_distinct(const std::vector<ComplexMatrix>& list,
                       double threshold) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (frob(list[i] - list[j]) <= threshold) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ybx
