#include "ybx/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/random.hpp"

namespace ybx {
namespace {

// Scale for residuals of mixed degree-3 products in M and Y, symmetric in the
// two operands: covers both MYM and YMY shaped terms.
double cubic_check_scale(const ComplexMatrix& M, const ComplexMatrix& Y) {
  const double nm = std::max(1.0, frob(M));
  const double ny = std::max(1.0, frob(Y));
  return nm * ny * std::max(nm, ny);
}

BSource b_source_of(ProjectorSource src) {
  switch (src) {
    case ProjectorSource::drazin:
      return BSource::case2;
    case ProjectorSource::sign_shift:
      return BSource::case3;
    case ProjectorSource::spectral:
    case ProjectorSource::complementary:
    case ProjectorSource::sum:
      return BSource::case4;
    case ProjectorSource::eigen_replaced_sign:
      return BSource::case5;
    case ProjectorSource::user:
      break;
  }
  return BSource::user;
}

}  // namespace

BCandidate check_B_consistency(const ComplexMatrix& A, const ComplexMatrix& B,
                               const ToleranceConfig& cfg, BSource source) {
  const ComplexMatrix Adag = pinv(A, cfg);
  const ComplexMatrix Bdag = pinv(B, cfg);
  BCandidate out;
  out.B = B;
  out.source = source;
  out.r1 = frob(A * B * A - B * B);
  out.r2 = frob(A * Adag * B - B);
  out.r3 = frob(B * A * Bdag * B - B * A);
  const double na = std::max(1.0, frob(A));
  out.consistent = std::max({out.r1, out.r2, out.r3}) <=
                   cfg.residual_tol * na * na * na;
  return out;
}

SolutionFamily family_from_B(const ComplexMatrix& A, const BCandidate& cand,
                             const ToleranceConfig& cfg) {
  if (!cand.consistent) {
    throw InconsistentB(
        "candidate B fails the splitting consistency conditions");
  }
  const Index n = A.rows();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix Adag = pinv(A, cfg);
  const ComplexMatrix Bdag = pinv(cand.B, cfg);
  SolutionFamily fam;
  fam.left = Id - Adag * A;
  fam.right = Id - cand.B * Bdag;
  fam.base = Adag * cand.B + fam.left * A * cand.B * Bdag;
  fam.source = cand.source;
  return fam;
}

std::pair<BCandidate, BCandidate> b_from_projector(const ComplexMatrix& A,
                                                   const ProjectorCertificate& cert,
                                                   const ToleranceConfig& cfg) {
  if (!cert.valid) {
    throw InvalidProjector("projector certificate is not valid");
  }
  const Index n = A.rows();
  const ComplexMatrix A2 = A * A;
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const BSource src = b_source_of(cert.source);
  return {check_B_consistency(A, A2 * cert.P, cfg, src),
          check_B_consistency(A, A2 * (Id - cert.P), cfg, src)};
}

SolutionFamily commuting_family_zero(const ComplexMatrix& A,
                                     const ToleranceConfig& cfg) {
  const Index n = A.rows();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix Adag = pinv(A, cfg);
  SolutionFamily fam;
  fam.base = ComplexMatrix::Zero(n, n);
  fam.left = Id - Adag * A;
  fam.right = Id - A * Adag;
  fam.source = BSource::case1_zero;
  return fam;
}

SolutionFamily commuting_family_sq(const ComplexMatrix& A,
                                   const ToleranceConfig& cfg) {
  const Index n = A.rows();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix Adag = pinv(A, cfg);
  const ComplexMatrix A2 = A * A;
  SolutionFamily fam;
  fam.left = Id - Adag * A;
  fam.right = Id - A * Adag;
  fam.base = Adag * A2 + fam.left * A2 * Adag;
  fam.source = BSource::case1_sq;
  return fam;
}

namespace {

// Shared tail of the two index-based constructions. The identity
// A^{l+1} Y = A^l (respectively Y A^{l+1} = A^l) certifies that Y inherited
// the range compatibility the closed form relies on; its residual is scaled
// by ||A||^{l+1} ||Y|| to stay meaningful for nilpotent matrices whose high
// powers are pure rounding noise.
void require_power_identity(double err, const ComplexMatrix& A, Index ell,
                            const ComplexMatrix& Y, const ToleranceConfig& cfg) {
  const double na = std::max(1.0, frob(A));
  const double scale =
      std::pow(na, static_cast<double>(ell + 1)) * std::max(1.0, frob(Y));
  if (err > cfg.residual_tol * scale) {
    throw Error("index-based construction lost the power identity");
  }
}

}  // namespace

ComplexMatrix index_solution_left(const ComplexMatrix& A, const ComplexMatrix& Z,
                                  const ComplexMatrix& V,
                                  const ToleranceConfig& cfg) {
  const Index n = A.rows();
  if (rank(A, cfg) == n) {
    throw NonsingularInput("index-based family needs a singular matrix");
  }
  const Index ell = matrix_index(A, cfg);
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix Al = matrix_power(A, ell);
  const ComplexMatrix Alp1 = Al * A;
  const ComplexMatrix Y = pinv(Alp1, cfg) * Al * (Id - A * Z) + Z;
  require_power_identity(frob(Alp1 * Y - Al), A, ell, Y, cfg);
  return matrix_power(A, ell - 1) * (A * Y - Id) * V;
}

ComplexMatrix index_solution_right(const ComplexMatrix& A, const ComplexMatrix& Z,
                                   const ComplexMatrix& V,
                                   const ToleranceConfig& cfg) {
  const Index n = A.rows();
  if (rank(A, cfg) == n) {
    throw NonsingularInput("index-based family needs a singular matrix");
  }
  const Index ell = matrix_index(A, cfg);
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix Al = matrix_power(A, ell);
  const ComplexMatrix Alp1 = A * Al;
  const ComplexMatrix Y = (Id - Z * A) * Al * pinv(Alp1, cfg) + Z;
  require_power_identity(frob(Y * Alp1 - Al), A, ell, Y, cfg);
  return V * (Y * A - Id) * matrix_power(A, ell - 1);
}

ComplexMatrix similarity_transport(const ComplexMatrix& S, const ComplexMatrix& Y,
                                   const ToleranceConfig& cfg) {
  if (rank(S, cfg) != S.rows()) {
    throw SingularS("similarity factor is singular at tolerance");
  }
  Eigen::PartialPivLU<ComplexMatrix> lu(S);
  return S * Y * lu.inverse();
}

ComplexMatrix block_diag_compose(const ComplexMatrix& S, const ComplexMatrix& J1,
                                 const ComplexMatrix& J0, const ComplexMatrix& Y1,
                                 const ComplexMatrix& Y4,
                                 const ToleranceConfig& cfg) {
  const double err1 = frob(Y1 * J1 * Y1 - J1 * Y1 * J1);
  if (err1 > cfg.residual_tol * cubic_check_scale(J1, Y1)) {
    throw BlockEquationViolated("Y1 does not solve the nonsingular block equation");
  }
  const double err0 = frob(Y4 * J0 * Y4 - J0 * Y4 * J0);
  if (err0 > cfg.residual_tol * cubic_check_scale(J0, Y4)) {
    throw BlockEquationViolated("Y4 does not solve the nilpotent block equation");
  }
  if (rank(S, cfg) != S.rows()) {
    throw SingularS("similarity factor is singular at tolerance");
  }
  const Index p = J1.rows();
  const Index q = J0.rows();
  ComplexMatrix blocks = ComplexMatrix::Zero(p + q, p + q);
  blocks.topLeftCorner(p, p) = Y1;
  blocks.bottomRightCorner(q, q) = Y4;
  Eigen::PartialPivLU<ComplexMatrix> lu(S);
  return S * blocks * lu.inverse();
}

SchurBlockData schur_block_data(const ComplexMatrix& A,
                                const ToleranceConfig& cfg) {
  const Index n = A.rows();
  const Index r = rank(A, cfg);
  if (r == n) {
    throw NonsingularInput("Schur split needs a singular matrix");
  }
  const SchurForm base = schur_complex(A);
  std::vector<double> mags(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    mags[static_cast<std::size_t>(i)] = std::abs(base.T(i, i));
  }
  std::vector<double> sorted = mags;
  std::sort(sorted.begin(), sorted.end());

  const auto split_at = [&](double cutoff) {
    std::vector<bool> keep(mags.size());
    Index s = 0;
    for (std::size_t i = 0; i < mags.size(); ++i) {
      keep[i] = mags[i] > cutoff;
      if (keep[i]) ++s;
    }
    return std::pair<std::vector<bool>, Index>(std::move(keep), s);
  };

  double epsilon = sorted[static_cast<std::size_t>(n - r - 1)];
  auto [keep, s] = split_at(epsilon);
  if (s != r) {
    epsilon = 0.5 * (sorted[static_cast<std::size_t>(n - r - 1)] +
                     sorted[static_cast<std::size_t>(n - r)]);
    std::tie(keep, s) = split_at(epsilon);
    if (s != r) {
      throw SplitMismatch("magnitude split does not isolate the zero cluster",
                          epsilon);
    }
  }

  // Even a count-correct split is meaningless when the dropped cluster is not
  // genuinely below the kept one: rounding noise around an ill-conditioned
  // zero eigenvalue produces magnitudes well above the working precision that
  // crowd the smallest kept ones.
  if (s > 0 && s < n) {
    double max_dropped = 0.0;
    double min_kept = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < mags.size(); ++i) {
      if (keep[i]) {
        min_kept = std::min(min_kept, mags[i]);
      } else {
        max_dropped = std::max(max_dropped, mags[i]);
      }
    }
    const double zero_scale =
        100.0 * static_cast<double>(n) *
        std::numeric_limits<double>::epsilon() *
        std::max(1.0, *std::max_element(mags.begin(), mags.end()));
    if (max_dropped > 0.0 && min_kept < 4.0 * max_dropped &&
        epsilon > zero_scale) {
      throw SplitMismatch("zero cluster not separated from the kept spectrum",
                          epsilon);
    }
  }

  SchurBlockData data;
  data.form = ordschur_select(base, keep);
  data.s = s;
  data.B1 = data.form.T.topLeftCorner(s, s);
  data.B2 = data.form.T.topRightCorner(s, n - s);
  data.epsilon = epsilon;
  return data;
}

ComplexMatrix compose_schur_solution(const SchurBlockData& data,
                                     const ComplexMatrix& Z1,
                                     const ComplexMatrix& Z2,
                                     const ComplexMatrix& Z4) {
  const Index n = data.form.T.rows();
  const Index s = data.s;
  ComplexMatrix blocks(n, n);
  blocks.topLeftCorner(s, s) = Z1;
  blocks.topRightCorner(s, n - s) = Z2;
  blocks.bottomLeftCorner(n - s, s) = data.form.T.bottomLeftCorner(n - s, s);
  blocks.bottomRightCorner(n - s, n - s) = Z4;
  return data.form.U * blocks * data.form.U.adjoint();
}

std::vector<ComplexMatrix> schur_special_solutions(const ComplexMatrix& A,
                                                   const ToleranceConfig& cfg,
                                                   std::uint64_t seed) {
  const SchurBlockData data = schur_block_data(A, cfg);
  const Index n = A.rows();
  const Index s = data.s;
  const ComplexMatrix zero1 = ComplexMatrix::Zero(s, s);
  const ComplexMatrix zero4 = ComplexMatrix::Zero(n - s, n - s);

  std::vector<ComplexMatrix> out;
  out.push_back(compose_schur_solution(
      data, zero1, unit_gaussian_complex(s, n - s, mix_seed(seed, 1)),
      unit_gaussian_complex(n - s, n - s, mix_seed(seed, 2))));
  out.push_back(compose_schur_solution(data, data.B1, data.B2, zero4));
  const ComplexMatrix core = data.B1 * data.B1 * drazin(data.B1, cfg);
  out.push_back(compose_schur_solution(data, core, data.B2, zero4));
  if (rank(data.B1, cfg) < s) {
    const ComplexMatrix range_proj = data.B1 * drazin(data.B1, cfg);
    out.push_back(
        compose_schur_solution(data, core, range_proj * data.B2, zero4));
  }
  return out;
}

ComplexMatrix schur_family_solve(const SchurBlockData& data, std::uint64_t seed,
                                 const ToleranceConfig& cfg) {
  const Index n = data.form.T.rows();
  const Index s = data.s;
  const Index k = n - s;
  ComplexMatrix C(s, n);
  C.leftCols(s) = data.B1 * data.B1;
  C.rightCols(k) = data.B1 * data.B2;
  const ComplexMatrix D = data.B1 * data.B1 * data.B2;
  const MinNormSolution particular = min_norm_solve(C, D, cfg);
  const ComplexMatrix N = nullspace_basis(C, cfg);
  if (N.cols() < k) {
    throw NullspaceTooSmall("nullspace has fewer columns than n - s");
  }
  const RealMatrix weights = gaussian_real(k, 1, mix_seed(seed, 3));
  const ComplexMatrix Z =
      particular.X +
      N.leftCols(k) * weights.col(0).cast<Complex>().asDiagonal();
  return compose_schur_solution(data, data.B1, Z.topRows(s), Z.bottomRows(k));
}

ComplexMatrix schur_family_solve(const ComplexMatrix& A, std::uint64_t seed,
                                 const ToleranceConfig& cfg) {
  return schur_family_solve(schur_block_data(A, cfg), seed, cfg);
}

bool splitting_roundtrip_check(const ComplexMatrix& A, const ComplexMatrix& X,
                               const ToleranceConfig& cfg) {
  const double residual = frob(A * X * A - X * A * X);
  if (residual > cfg.residual_tol * solution_scale(A, X)) {
    return false;
  }
  const ComplexMatrix B = A * X;
  const double companion = frob(X * B - B * A);
  return companion <= cfg.residual_tol * cubic_check_scale(A, X);
}

}  // namespace ybx
