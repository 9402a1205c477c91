#pragma once

#include <utility>
#include <vector>

#include "ybx/linalg.hpp"

namespace ybx {

enum class ProjectorSource {
  drazin,
  spectral,
  complementary,
  sum,
  sign_shift,
  eigen_replaced_sign,
  user,
};

// A candidate projector together with the residuals certifying it. valid is
// true iff both residuals are within
// projector_tol * max(1, ||A||_F) * max(1, ||P||_F).
struct ProjectorCertificate {
  ComplexMatrix P;
  double idempotency_residual;  // ||P^2 - P||_F
  double commutation_residual;  // ||A P - P A||_F
  ProjectorSource source;
  bool valid;
};

ProjectorCertificate certify_projector(const ComplexMatrix& A, ComplexMatrix P,
                                       ProjectorSource source,
                                       const ToleranceConfig& cfg = {});

// P_M = M M^D for M commuting with A (checked; NonCommutingInput otherwise).
ProjectorCertificate drazin_projector(const ComplexMatrix& A, const ComplexMatrix& M,
                                      const ToleranceConfig& cfg = {});

// Member f(A) - f(lambda) I of the commuting family attached to eigenvalue
// lambda, with f the polynomial with ascending coefficients coeffs.
ComplexMatrix commuting_poly_matrix(const ComplexMatrix& A, Complex lambda,
                                    const std::vector<Complex>& coeffs,
                                    const ToleranceConfig& cfg = {});

// Spectral projector G_lambda = I - (A - lambda I)(A - lambda I)^D onto the
// generalized eigenspace of lambda.
ProjectorCertificate spectral_projector(const ComplexMatrix& A, Complex lambda,
                                        const ToleranceConfig& cfg = {});

// P_lambda = I - G_lambda.
ProjectorCertificate complementary_projector(const ComplexMatrix& A, Complex lambda,
                                             const ToleranceConfig& cfg = {});

// E_Gamma = sum of G_{lambda_i} over i in gamma; gamma holds indices into
// distinct_eigenvalues(A, cfg) (sorted by magnitude, then phase).
ProjectorCertificate sum_projector(const ComplexMatrix& A, const std::vector<int>& gamma,
                                   const ToleranceConfig& cfg = {});

struct SignShiftAlphas {
  std::vector<double> values;  // -(r_k + r_{k+1})/2 for ascending real parts r
  bool rotated;                // true if computed from -iA (purely imaginary spectrum)
};

// Midpoint shifts between consecutive distinct real parts of the spectrum.
// Purely imaginary spectra are rotated to -iA first and flagged.
SignShiftAlphas sign_shift_alphas(const ComplexMatrix& A, const ToleranceConfig& cfg = {});

// Projector pair ((I + S)/2, (I - S)/2) with S = sign(A + alpha I), or
// S = sign(-iA + alpha I) when rotated is set. Certificates are always taken
// against the original A.
std::pair<ProjectorCertificate, ProjectorCertificate> sign_shift_projectors(
    const ComplexMatrix& A, Complex alpha, const ToleranceConfig& cfg = {},
    bool rotated = false);

// Same pair from the eigenvalue-replaced sign: S = sign(A + (alpha - lambda) G_lambda).
std::pair<ProjectorCertificate, ProjectorCertificate> eigen_replaced_sign_projectors(
    const ComplexMatrix& A, Complex lambda, Complex alpha,
    const ToleranceConfig& cfg = {});

}  // namespace ybx
