#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ybx {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Numerical knobs shared across the library. rank_tol_factor == 0 means
// "use max(rows, cols)", giving the usual threshold max(rows,cols)*eps*sigma_max.
// The cluster / axis tolerances are relative: they get scaled by
// max(1, ||A||_F) at the point of use.
struct ToleranceConfig {
  double rank_tol_factor = 0.0;
  double eig_cluster_tol = 1e-8;
  double imag_axis_tol = 1e-10;
  double residual_tol = 1e-8;
  double projector_tol = 1e-8;
};

inline double frob(const ComplexMatrix& m) { return m.norm(); }

// Scale used by the universal solution check ||AXA - XAX|| <= tol * scale.
inline double solution_scale(const ComplexMatrix& a, const ComplexMatrix& x) {
  const double na = std::max(1.0, frob(a));
  const double nx = std::max(1.0, frob(x));
  return na * na * nx;
}

}  // namespace ybx
