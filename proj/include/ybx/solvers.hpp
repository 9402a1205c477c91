#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ybx/linalg.hpp"
#include "ybx/projectors.hpp"
#include "ybx/types.hpp"

namespace ybx {

// Construction route of a candidate B for the linear splitting AX = B,
// XB = BA. case1_zero / case1_sq are the trivial projectors (B = 0, B = A^2);
// case2 uses a Drazin projector M M^D, case3 a shifted matrix sign, case4 a
// spectral projector, case5 an eigenvalue-replaced sign.
enum class BSource {
  case1_zero,
  case1_sq,
  case2,
  case3,
  case4,
  case5,
  user,
};

// Candidate B with its three consistency residuals
//   r1 = ||ABA - B^2||, r2 = ||A A+ B - B||, r3 = ||B A B+ B - B A||
// (Frobenius throughout). consistent is true iff
// max(r1, r2, r3) <= residual_tol * max(1, ||A||)^3; the cubic scale matches
// the degree of the residual products.
struct BCandidate {
  ComplexMatrix B;
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  BSource source = BSource::user;
  bool consistent = false;
};

BCandidate check_B_consistency(const ComplexMatrix& A, const ComplexMatrix& B,
                               const ToleranceConfig& cfg = {},
                               BSource source = BSource::user);

// Affine solution family X(Y) = base + left * Y * right. For a consistent B,
//   base  = A+ B + (I - A+ A) A B B+,
//   left  = I - A+ A,
//   right = I - B B+,
// and every sample solves A X A = X A X.
struct SolutionFamily {
  ComplexMatrix base;
  ComplexMatrix left;
  ComplexMatrix right;
  BSource source = BSource::user;

  ComplexMatrix sample(const ComplexMatrix& Y) const {
    return base + left * Y * right;
  }
};

// Throws InconsistentB when the candidate failed its consistency check.
SolutionFamily family_from_B(const ComplexMatrix& A, const BCandidate& cand,
                             const ToleranceConfig& cfg = {});

// The pair (A^2 P, A^2 (I - P)) for a certified projector P commuting with A,
// both consistency-checked. Throws InvalidProjector on an invalid certificate.
std::pair<BCandidate, BCandidate> b_from_projector(const ComplexMatrix& A,
                                                   const ProjectorCertificate& cert,
                                                   const ToleranceConfig& cfg = {});

// X(Y1) = (I - A+ A) Y1 (I - A A+): the solutions with A X = 0 = X A. Every
// sample commutes with A.
SolutionFamily commuting_family_zero(const ComplexMatrix& A,
                                     const ToleranceConfig& cfg = {});

// X(Y2) = A+ A^2 + (I - A+ A) A^2 A+ + (I - A+ A) Y2 (I - A A+): the
// solutions of A X = A^2 = X A. Every sample commutes with A. For
// nonsingular A the family collapses to the single point X = A.
SolutionFamily commuting_family_sq(const ComplexMatrix& A,
                                   const ToleranceConfig& cfg = {});

// With l = matrix_index(A) >= 1:
//   Y = (A^{l+1})+ A^l (I - A Z) + Z,   X = A^{l-1} (A Y - I) V.
// The intermediate identity A^{l+1} Y = A^l is verified internally. Throws
// NonsingularInput when A has full rank.
ComplexMatrix index_solution_left(const ComplexMatrix& A, const ComplexMatrix& Z,
                                  const ComplexMatrix& V,
                                  const ToleranceConfig& cfg = {});

// Mirror construction:
//   Y = (I - Z A) A^l (A^{l+1})+ + Z,   X = V (Y A - I) A^{l-1},
// with Y A^{l+1} = A^l verified internally.
ComplexMatrix index_solution_right(const ComplexMatrix& A, const ComplexMatrix& Z,
                                   const ComplexMatrix& V,
                                   const ToleranceConfig& cfg = {});

// X = S Y S^{-1}. If Y solves the equation for S^{-1} A S, X solves it for A.
// Throws SingularS when S is rank-deficient at tolerance.
ComplexMatrix similarity_transport(const ComplexMatrix& S, const ComplexMatrix& Y,
                                   const ToleranceConfig& cfg = {});

// X = S diag(Y1, Y4) S^{-1} for A = S diag(J1, J0) S^{-1}. The block
// equations Y1 J1 Y1 = J1 Y1 J1 and Y4 J0 Y4 = J0 Y4 J0 are verified
// (BlockEquationViolated otherwise); S must be nonsingular (SingularS).
ComplexMatrix block_diag_compose(const ComplexMatrix& S, const ComplexMatrix& J1,
                                 const ComplexMatrix& J0, const ComplexMatrix& Y1,
                                 const ComplexMatrix& Y4,
                                 const ToleranceConfig& cfg = {});

// Reordered Schur form of a singular A with the large-magnitude eigenvalues
// leading:
//   A = U [[B1, B2], [O1, O2]] U*,  |diag(B1)| all > epsilon,
// where s = rank(A) is the order of B1 and O1 is numerically zero.
struct SchurBlockData {
  SchurForm form;      // reordered; O1, O2 live in form.T
  Index s = 0;         // order of the kept leading block (= rank at success)
  ComplexMatrix B1;    // s x s, upper triangular
  ComplexMatrix B2;    // s x (n-s)
  double epsilon = 0.0;  // magnitude cutoff used for the split
};

// Splits the Schur diagonal at epsilon = (n-r)-th smallest magnitude
// (strictly greater survive). If the kept count differs from r = rank(A), a
// single retry uses the midpoint of the (n-r)-th and (n-r+1)-th magnitudes;
// a further mismatch, or a kept/dropped magnitude gap under 4x while epsilon
// is above the numerical-zero scale, throws SplitMismatch (its payload
// carries the epsilon). Throws NonsingularInput for full-rank A.
SchurBlockData schur_block_data(const ComplexMatrix& A,
                                const ToleranceConfig& cfg = {});

// X = U [[Z1, Z2], [O1, Z4]] U* with O1 taken verbatim from the reordered
// form (numerically zero by construction).
ComplexMatrix compose_schur_solution(const SchurBlockData& data,
                                     const ComplexMatrix& Z1,
                                     const ComplexMatrix& Z2,
                                     const ComplexMatrix& Z4);

// The closed-form block choices, each recomposed through the Schur basis:
//   (i)   Z1 = 0, seeded random Z2, Z4;
//   (ii)  Z1 = B1, Z2 = B2, Z4 = 0;
//   (iii) Z1 = B1^2 B1^D (commutes with B1), Z2 = B2, Z4 = 0;
//   (iv)  Z1 = B1^2 B1^D, Z2 = B1 B1^D B2, Z4 = 0, only when B1 is singular.
// Propagates schur_block_data errors.
std::vector<ComplexMatrix> schur_special_solutions(const ComplexMatrix& A,
                                                   const ToleranceConfig& cfg = {},
                                                   std::uint64_t seed = 0);

// One randomized member of the underdetermined family with Z1 = B1 fixed:
// solve [B1^2  B1 B2] [Z2; Z4] = B1^2 B2 in the minimum-norm sense, then add
// nullspace columns weighted by a seeded standard-normal diagonal. Throws
// NullspaceTooSmall if the nullspace cannot absorb n - s columns.
ComplexMatrix schur_family_solve(const SchurBlockData& data, std::uint64_t seed,
                                 const ToleranceConfig& cfg = {});

ComplexMatrix schur_family_solve(const ComplexMatrix& A, std::uint64_t seed,
                                 const ToleranceConfig& cfg = {});

// True iff X solves the equation at tolerance and B = A X satisfies the
// splitting companion X B = B A, the converse direction of the splitting
// equivalence.
bool splitting_roundtrip_check(const ComplexMatrix& A, const ComplexMatrix& X,
                               const ToleranceConfig& cfg = {});

}  // namespace ybx
