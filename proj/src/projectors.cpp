#include "ybx/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ybx {

namespace {

void require_square(const ComplexMatrix& A, const char* who) {
  if (A.rows() != A.cols())
    throw std::invalid_argument(std::string(who) + ": square input required");
}

// Distance from lambda to the nearest computed eigenvalue; throws if beyond
// the clustering threshold.
void require_eigenvalue(const ComplexMatrix& A, Complex lambda,
                        const ToleranceConfig& cfg, const char* who) {
  const auto clusters = distinct_eigenvalues(A, cfg);
  const double threshold = cfg.eig_cluster_tol * std::max(1.0, frob(A));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : clusters) best = std::min(best, std::abs(c.value - lambda));
  if (!(best <= threshold)) {
    std::ostringstream msg;
    msg << who << ": " << lambda << " is not an eigenvalue (nearest is " << best
        << " away, threshold " << threshold << ")";
    throw NotAnEigenvalue(msg.str());
  }
}

}  // namespace

ProjectorCertificate certify_projector(const ComplexMatrix& A, ComplexMatrix P,
                                       ProjectorSource source,
                                       const ToleranceConfig& cfg) {
  require_square(A, "certify_projector");
  if (P.rows() != A.rows() || P.cols() != A.cols())
    throw std::invalid_argument("certify_projector: dimension mismatch");
  const double idem = (P * P - P).norm();
  const double comm = (A * P - P * A).norm();
  const double scale =
      cfg.projector_tol * std::max(1.0, frob(A)) * std::max(1.0, frob(P));
  const bool valid = idem <= scale && comm <= scale;
  return {std::move(P), idem, comm, source, valid};
}

ProjectorCertificate drazin_projector(const ComplexMatrix& A, const ComplexMatrix& M,
                                      const ToleranceConfig& cfg) {
  require_square(A, "drazin_projector");
  if (M.rows() != A.rows() || M.cols() != A.cols())
    throw std::invalid_argument("drazin_projector: dimension mismatch");
  const double comm = (A * M - M * A).norm();
  const double bound =
      cfg.projector_tol * std::max(1.0, frob(A)) * std::max(1.0, frob(M));
  if (comm > bound) {
    std::ostringstream msg;
    msg << "drazin_projector: ||AM - MA|| = " << comm << " exceeds " << bound;
    throw NonCommutingInput(msg.str());
  }
  return certify_projector(A, M * drazin(M, cfg), ProjectorSource::drazin, cfg);
}

ComplexMatrix commuting_poly_matrix(const ComplexMatrix& A, Complex lambda,
                                    const std::vector<Complex>& coeffs,
                                    const ToleranceConfig& cfg) {
  require_square(A, "commuting_poly_matrix");
  require_eigenvalue(A, lambda, cfg, "commuting_poly_matrix");
  const Index n = A.rows();
  // Horner evaluation of f(A) and f(lambda).
  ComplexMatrix M = ComplexMatrix::Zero(n, n);
  Complex flambda(0, 0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    M = M * A + *it * ComplexMatrix::Identity(n, n);
    flambda = flambda * lambda + *it;
  }
  return M - flambda * ComplexMatrix::Identity(n, n);
}

ProjectorCertificate spectral_projector(const ComplexMatrix& A, Complex lambda,
                                        const ToleranceConfig& cfg) {
  require_square(A, "spectral_projector");
  require_eigenvalue(A, lambda, cfg, "spectral_projector");
  const Index n = A.rows();
  const ComplexMatrix shifted = A - lambda * ComplexMatrix::Identity(n, n);
  ComplexMatrix G = ComplexMatrix::Identity(n, n) - shifted * drazin(shifted, cfg);
  return certify_projector(A, std::move(G), ProjectorSource::spectral, cfg);
}

ProjectorCertificate complementary_projector(const ComplexMatrix& A, Complex lambda,
                                             const ToleranceConfig& cfg) {
  ProjectorCertificate g = spectral_projector(A, lambda, cfg);
  ComplexMatrix P = ComplexMatrix::Identity(A.rows(), A.rows()) - g.P;
  return certify_projector(A, std::move(P), ProjectorSource::complementary, cfg);
}

ProjectorCertificate sum_projector(const ComplexMatrix& A, const std::vector<int>& gamma,
                                   const ToleranceConfig& cfg) {
  require_square(A, "sum_projector");
  if (gamma.empty()) throw EmptyGamma("sum_projector: Gamma must be nonempty");
  const auto clusters = distinct_eigenvalues(A, cfg);
  std::vector<int> sorted = gamma;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("sum_projector: Gamma has repeated indices");
  ComplexMatrix E = ComplexMatrix::Zero(A.rows(), A.cols());
  for (int i : sorted) {
    if (i < 0 || i >= static_cast<int>(clusters.size()))
      throw std::invalid_argument("sum_projector: Gamma index out of range");
    E += spectral_projector(A, clusters[i].value, cfg).P;
  }
  return certify_projector(A, std::move(E), ProjectorSource::sum, cfg);
}

SignShiftAlphas sign_shift_alphas(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  require_square(A, "sign_shift_alphas");
  const auto clusters = distinct_eigenvalues(A, cfg);
  const double scale = std::max(1.0, frob(A));
  const double real_merge = cfg.eig_cluster_tol * scale;
  const double axis_guard = cfg.imag_axis_tol * scale;

  bool all_on_axis = true;
  bool all_zero = true;
  for (const auto& c : clusters) {
    if (std::abs(c.value.real()) > axis_guard) all_on_axis = false;
    if (std::abs(c.value) > axis_guard) all_zero = false;
  }
  const bool rotate = all_on_axis && !all_zero;

  std::vector<double> reals;
  reals.reserve(clusters.size());
  for (const auto& c : clusters)
    reals.push_back(rotate ? (Complex(0, -1) * c.value).real() : c.value.real());
  std::sort(reals.begin(), reals.end());

  std::vector<double> distinct;
  for (double r : reals)
    if (distinct.empty() || r - distinct.back() > real_merge) distinct.push_back(r);

  SignShiftAlphas out{{}, rotate};
  for (std::size_t k = 0; k + 1 < distinct.size(); ++k)
    out.values.push_back(-(distinct[k] + distinct[k + 1]) / 2.0);
  return out;
}

std::pair<ProjectorCertificate, ProjectorCertificate> sign_shift_projectors(
    const ComplexMatrix& A, Complex alpha, const ToleranceConfig& cfg, bool rotated) {
  require_square(A, "sign_shift_projectors");
  const Index n = A.rows();
  const ComplexMatrix base = rotated ? ComplexMatrix(Complex(0, -1) * A) : A;
  const ComplexMatrix S =
      matrix_sign(base + alpha * ComplexMatrix::Identity(n, n), cfg);
  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
  return {certify_projector(A, (I + S) / 2.0, ProjectorSource::sign_shift, cfg),
          certify_projector(A, (I - S) / 2.0, ProjectorSource::sign_shift, cfg)};
}

std::pair<ProjectorCertificate, ProjectorCertificate> eigen_replaced_sign_projectors(
    const ComplexMatrix& A, Complex lambda, Complex alpha, const ToleranceConfig& cfg) {
  require_square(A, "eigen_replaced_sign_projectors");
  const ProjectorCertificate g = spectral_projector(A, lambda, cfg);
  const ComplexMatrix replaced = A + (alpha - lambda) * g.P;
  const ComplexMatrix S = matrix_sign(replaced, cfg);
  const Index n = A.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
  return {
      certify_projector(A, (I + S) / 2.0, ProjectorSource::eigen_replaced_sign, cfg),
      certify_projector(A, (I - S) / 2.0, ProjectorSource::eigen_replaced_sign, cfg)};
}

}  // namespace ybx
