#include "ybx/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ybx {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(const ComplexMatrix& A, const char* who) {
  if (!A.allFinite())
    throw std::invalid_argument(std::string(who) + ": input has non-finite entries");
}

void require_config(const ToleranceConfig& cfg) {
  if (cfg.rank_tol_factor < 0 || cfg.eig_cluster_tol < 0 || cfg.imag_axis_tol < 0 ||
      cfg.residual_tol < 0 || cfg.projector_tol < 0)
    throw std::invalid_argument("ToleranceConfig fields must be nonnegative");
}

double effective_rank_factor(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  return cfg.rank_tol_factor > 0
             ? cfg.rank_tol_factor
             : static_cast<double>(std::max(A.rows(), A.cols()));
}

Index count_above(const Eigen::VectorXd& sv, double threshold) {
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++r;
  return r;
}

Index rank_with_threshold(const ComplexMatrix& A, double threshold) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  return count_above(svd.singularValues(), threshold);
}

}  // namespace

double rank_threshold(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  require_config(cfg);
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  return effective_rank_factor(A, cfg) * kEps * smax;
}

Index rank(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  require_finite(A, "rank");
  require_config(cfg);
  if (A.rows() == 0 || A.cols() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  return count_above(sv, effective_rank_factor(A, cfg) * kEps * smax);
}

ComplexMatrix pinv(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  require_finite(A, "pinv");
  require_config(cfg);
  if (A.rows() == 0 || A.cols() == 0) return ComplexMatrix::Zero(A.cols(), A.rows());
  Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double threshold = effective_rank_factor(A, cfg) * kEps * smax;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

ComplexMatrix matrix_power(const ComplexMatrix& A, Index k) {
  if (A.rows() != A.cols()) throw std::invalid_argument("matrix_power: square input required");
  if (k < 0) throw std::invalid_argument("matrix_power: negative exponent");
  ComplexMatrix P = ComplexMatrix::Identity(A.rows(), A.rows());
  for (Index i = 0; i < k; ++i) P = P * A;
  return P;
}

Index matrix_index(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  require_finite(A, "matrix_index");
  require_config(cfg);
  if (A.rows() != A.cols()) throw std::invalid_argument("matrix_index: square input required");
  const Index n = A.rows();
  if (n == 0) return 0;

  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  const double smax = svd.singularValues()(0);
  const double factor = effective_rank_factor(A, cfg);

  // rank(A^0) = n; threshold for A^k scales like sigma_max(A)^k.
  Index rank_prev = n;
  ComplexMatrix P = A;
  double scale = smax;
  for (Index l = 0; l <= n; ++l) {
    Index rank_next = rank_with_threshold(P, factor * kEps * scale);
    if (rank_next == rank_prev) return l;
    rank_prev = rank_next;
    P = P * A;
    scale *= smax;
  }
  return n;  // rank sequence is strictly decreasing at most n times
}

ComplexMatrix drazin(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  require_finite(A, "drazin");
  const Index l = matrix_index(A, cfg);
  const ComplexMatrix Al = matrix_power(A, l);
  const ComplexMatrix mid = pinv(matrix_power(A, 2 * l + 1), cfg);
  return Al * mid * Al;
}

SchurForm schur_complex(const ComplexMatrix& A) {
  require_finite(A, "schur_complex");
  if (A.rows() != A.cols()) throw std::invalid_argument("schur_complex: square input required");
  if (A.rows() == 0) return {ComplexMatrix(0, 0), ComplexMatrix(0, 0)};
  Eigen::ComplexSchur<ComplexMatrix> schur(A, /*computeU=*/true);
  if (schur.info() != Eigen::Success)
    throw SchurConvergence("schur_complex: QR iteration failed to converge");
  return {schur.matrixU(), schur.matrixT()};
}

namespace {

// Swap the adjacent diagonal entries (k, k+1) of the triangular factor by a
// unitary similarity, updating U alongside. The rotation maps the eigenvector
// [t12, t22 - t11] of the trailing eigenvalue onto e1.
void swap_adjacent(ComplexMatrix& T, ComplexMatrix& U, Index k) {
  const Index n = T.rows();
  const Complex t11 = T(k, k);
  const Complex t12 = T(k, k + 1);
  const Complex t22 = T(k + 1, k + 1);

  const Complex f = t12;
  const Complex g = t22 - t11;
  const double norm = std::hypot(std::abs(f), std::abs(g));
  if (norm == 0.0) return;  // equal eigenvalues, swap is a no-op

  Complex cs, sn;
  if (std::abs(f) == 0.0) {
    cs = 0.0;
    sn = 1.0;
  } else {
    cs = std::abs(f) / norm;
    sn = (f / std::abs(f)) * std::conj(g) / norm;
  }
  // R = [[cs, sn], [-conj(sn), cs]] maps [f, g] -> [r, 0].

  // Rows k, k+1 of T: [rows] <- R * [rows].
  for (Index j = 0; j < n; ++j) {
    const Complex a = T(k, j);
    const Complex b = T(k + 1, j);
    T(k, j) = cs * a + sn * b;
    T(k + 1, j) = -std::conj(sn) * a + cs * b;
  }
  // Columns k, k+1 of T: [cols] <- [cols] * R^H.
  for (Index i = 0; i < n; ++i) {
    const Complex a = T(i, k);
    const Complex b = T(i, k + 1);
    T(i, k) = a * cs + b * std::conj(sn);
    T(i, k + 1) = a * (-sn) + b * cs;
  }
  // U <- U * R^H.
  for (Index i = 0; i < U.rows(); ++i) {
    const Complex a = U(i, k);
    const Complex b = U(i, k + 1);
    U(i, k) = a * cs + b * std::conj(sn);
    U(i, k + 1) = a * (-sn) + b * cs;
  }
  T(k + 1, k) = 0.0;

  // The similarity moves the eigenvalue pair (t11, t22) to (t22, t11) up to
  // rounding; drift beyond that means the swap failed.
  const double pair_scale = std::max(1.0, std::abs(t11) + std::abs(t22));
  const double drift = std::abs(T(k, k) - t22) + std::abs(T(k + 1, k + 1) - t11);
  if (drift > 1e-6 * pair_scale) {
    std::ostringstream msg;
    msg << "ordschur_select: swap of eigenvalue pair (" << t11 << ", " << t22
        << ") at position " << k << " drifted by " << drift;
    throw SwapFailed(msg.str());
  }
}

}  // namespace

SchurForm ordschur_select(const SchurForm& F, const std::vector<bool>& keep) {
  const Index n = F.T.rows();
  if (F.T.cols() != n || F.U.rows() != n || F.U.cols() != n)
    throw std::invalid_argument("ordschur_select: malformed Schur form");
  if (static_cast<Index>(keep.size()) != n)
    throw std::invalid_argument("ordschur_select: keep mask size mismatch");

  SchurForm out{F.U, F.T};
  std::vector<bool> mask = keep;
  Index target = 0;
  for (Index j = 0; j < n; ++j) {
    if (!mask[j]) continue;
    for (Index k = j; k > target; --k) {
      swap_adjacent(out.T, out.U, k - 1);
      std::swap(mask[k - 1], mask[k]);
    }
    ++target;
  }
  return out;
}

ComplexMatrix matrix_sign(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  require_finite(A, "matrix_sign");
  require_config(cfg);
  if (A.rows() != A.cols()) throw std::invalid_argument("matrix_sign: square input required");
  const Index n = A.rows();
  if (n == 0) return ComplexMatrix(0, 0);

  SchurForm F = schur_complex(A);
  const double guard = cfg.imag_axis_tol * std::max(1.0, frob(A));
  std::vector<bool> keep(n);
  Index p = 0;
  for (Index i = 0; i < n; ++i) {
    const Complex lambda = F.T(i, i);
    if (std::abs(lambda.real()) <= guard) {
      std::ostringstream msg;
      msg << "matrix_sign: eigenvalue " << lambda << " lies within " << guard
          << " of the imaginary axis";
      throw ImaginaryAxisEigenvalue(msg.str());
    }
    keep[i] = lambda.real() > 0.0;
    if (keep[i]) ++p;
  }

  if (p == n) return ComplexMatrix::Identity(n, n);
  if (p == 0) return -ComplexMatrix::Identity(n, n);

  SchurForm R = ordschur_select(F, keep);
  const Index q = n - p;
  const ComplexMatrix T11 = R.T.topLeftCorner(p, p);
  const ComplexMatrix T12 = R.T.topRightCorner(p, q);
  const ComplexMatrix T22 = R.T.bottomRightCorner(q, q);

  // Solve T11 W - W T22 = 2 T12 column by column; T11 upper triangular with
  // spectrum in the open right half-plane, T22 in the left, so each shifted
  // triangular system is nonsingular.
  ComplexMatrix W(p, q);
  for (Index j = 0; j < q; ++j) {
    ComplexVector rhs = 2.0 * T12.col(j);
    for (Index k = 0; k < j; ++k) rhs += W.col(k) * T22(k, j);
    ComplexMatrix shifted = T11;
    shifted.diagonal().array() -= T22(j, j);
    W.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }

  ComplexMatrix ST = ComplexMatrix::Zero(n, n);
  ST.topLeftCorner(p, p) = ComplexMatrix::Identity(p, p);
  ST.topRightCorner(p, q) = W;
  ST.bottomRightCorner(q, q) = -ComplexMatrix::Identity(q, q);
  return R.U * ST * R.U.adjoint();
}

ComplexMatrix nullspace_basis(const ComplexMatrix& A, const ToleranceConfig& cfg) {
  require_finite(A, "nullspace_basis");
  require_config(cfg);
  if (A.cols() == 0) return ComplexMatrix(0, 0);
  if (A.rows() == 0) return ComplexMatrix::Identity(A.cols(), A.cols());
  Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double threshold = effective_rank_factor(A, cfg) * kEps * smax;
  const Index r = count_above(sv, threshold);
  return svd.matrixV().rightCols(A.cols() - r);
}

MinNormSolution min_norm_solve(const ComplexMatrix& C, const ComplexMatrix& D,
                               const ToleranceConfig& cfg) {
  require_finite(C, "min_norm_solve");
  require_finite(D, "min_norm_solve");
  if (C.rows() != D.rows())
    throw std::invalid_argument("min_norm_solve: row count mismatch");
  ComplexMatrix X = pinv(C, cfg) * D;
  const double residual = (C * X - D).norm();
  const double scale = frob(C) * frob(X) + frob(D);
  return {std::move(X), residual <= cfg.residual_tol * scale};
}

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B) {
  ComplexMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

std::vector<EigenvalueCluster> distinct_eigenvalues(const ComplexMatrix& A,
                                                    const ToleranceConfig& cfg) {
  require_finite(A, "distinct_eigenvalues");
  require_config(cfg);
  SchurForm F = schur_complex(A);
  const Index n = F.T.rows();
  if (n == 0) return {};

  const double threshold = cfg.eig_cluster_tol * std::max(1.0, frob(A));

  // Single-linkage union-find over all pairs.
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (std::abs(F.T(i, i) - F.T(j, j)) <= threshold) {
        Index a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }

  std::vector<EigenvalueCluster> clusters;
  std::vector<Index> root_slot(n, -1);
  for (Index i = 0; i < n; ++i) {
    Index r = find(i);
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<Index>(clusters.size());
      clusters.push_back({Complex(0, 0), 0});
    }
    auto& c = clusters[root_slot[r]];
    c.value += F.T(i, i);
    c.multiplicity += 1;
  }
  for (auto& c : clusters) c.value /= static_cast<double>(c.multiplicity);

  std::sort(clusters.begin(), clusters.end(),
            [](const EigenvalueCluster& a, const EigenvalueCluster& b) {
              const double ma = std::abs(a.value), mb = std::abs(b.value);
              if (ma != mb) return ma < mb;
              return std::arg(a.value) < std::arg(b.value);
            });
  return clusters;
}

}  // namespace ybx
