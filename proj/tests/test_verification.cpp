#include <doctest.h>

#include <cmath>
#include <vector>

#include "ybx/fixtures.hpp"
#include "ybx/linalg.hpp"
#include "ybx/random.hpp"
#include "ybx/solvers.hpp"
#include "ybx/verification.hpp"

using namespace ybx;

namespace {

ComplexMatrix cid(Index n) { return ComplexMatrix::Identity(n, n); }

// Column-stacking vec.
ComplexMatrix vec(const ComplexMatrix& M) {
  ComplexMatrix v(M.rows() * M.cols(), 1);
  Index k = 0;
  for (Index j = 0; j < M.cols(); ++j)
    for (Index i = 0; i < M.rows(); ++i) v(k++, 0) = M(i, j);
  return v;
}

}  // namespace

TEST_CASE("residual closed forms") {
  const ComplexMatrix A = fixture("example1").A;
  CHECK(frob(residual(A, A)) == 0.0);
  CHECK(frob(residual(A, ComplexMatrix::Zero(3, 3))) == 0.0);
  CHECK((residual(A, cid(3)) - (A * A - A)).norm() == 0.0);
}

TEST_CASE("frechet_operator closed forms") {
  SUBCASE("at X = 0 only the quadratic term survives") {
    const ComplexMatrix A = fixture("example1").A;
    const ComplexMatrix M = frechet_operator(A, ComplexMatrix::Zero(3, 3));
    CHECK((M - kron(A.transpose(), A)).norm() == 0.0);
  }

  SUBCASE("scalar case") {
    ComplexMatrix a(1, 1), x(1, 1);
    a << 3.0;
    x << 5.0;
    const ComplexMatrix M = frechet_operator(a, x);
    REQUIRE(M.rows() == 1);
    CHECK(std::abs(M(0, 0) - Complex(-21.0)) < 1e-13);  // a^2 - 2 a x
  }
}

TEST_CASE("frechet_operator columns are directional derivatives") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 3);
    const ComplexMatrix A = gaussian_complex(n, n, mix_seed(seed, 1));
    const ComplexMatrix X = gaussian_complex(n, n, mix_seed(seed, 2));
    const ComplexMatrix M = frechet_operator(A, X);
    REQUIRE(M.rows() == n * n);
    double scale = std::max(1.0, frob(M));
    for (Index l = 0; l < n; ++l) {
      for (Index k = 0; k < n; ++k) {
        ComplexMatrix E = ComplexMatrix::Zero(n, n);
        E(k, l) = 1.0;
        const ComplexMatrix expect = vec(ComplexMatrix(
            A * E * A - E * A * X - X * A * E));
        CHECK((M.col(k + l * n) - expect).norm() <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("frechet_operator matches finite differences") {
  const double h = 1e-6;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 4);
    const ComplexMatrix A = unit_gaussian_complex(n, n, mix_seed(seed, 11));
    const ComplexMatrix X = unit_gaussian_complex(n, n, mix_seed(seed, 12));
    const ComplexMatrix E = unit_gaussian_complex(n, n, mix_seed(seed, 13));
    const ComplexMatrix M = frechet_operator(A, X);
    const ComplexMatrix fd =
        (residual(A, ComplexMatrix(X + h * E)) - residual(A, X)) / h;
    const ComplexMatrix predicted = M * vec(E);
    CHECK((vec(fd) - predicted).norm() <=
          1e-4 * std::max(1.0, frob(M)) * frob(E));
  }
}

TEST_CASE("est_rel on exact and degenerate inputs") {
  const ComplexMatrix A = fixture("example1").A;

  SUBCASE("a true solution scores zero") {
    const auto rep = est_rel(A, A);
    CHECK(rep.residual_norm == 0.0);
    CHECK(rep.est_rel == 0.0);
    CHECK(rep.is_solution);
  }

  SUBCASE("the zero candidate has an empty denominator") {
    const auto rep = est_rel(A, ComplexMatrix::Zero(3, 3));
    CHECK(rep.residual_norm == 0.0);
    CHECK(std::isinf(rep.est_rel));
    CHECK(rep.is_solution);  // residual is still zero
  }

  SUBCASE("the reported quantities tie together") {
    const ComplexMatrix X = gaussian_complex(3, 3, 21);
    const auto rep = est_rel(A, X);
    CHECK(rep.residual_norm == doctest::Approx(frob(residual(A, X))));
    CHECK(rep.frechet_norm == doctest::Approx(frob(frechet_operator(A, X))));
    CHECK(rep.est_rel ==
          doctest::Approx(rep.residual_norm / (rep.frechet_norm * frob(X))));
    CHECK_FALSE(rep.is_solution);
  }
}

TEST_CASE("est_rel decays linearly as a perturbed solution approaches the family") {
  const ComplexMatrix A = fixture("example1").A;
  const auto fam = family_from_B(A, check_B_consistency(A, ComplexMatrix(A * A)));
  const ComplexMatrix X0 = fam.sample(unit_gaussian_complex(3, 3, 22));
  REQUIRE(is_solution(A, X0));
  const ComplexMatrix E = unit_gaussian_complex(3, 3, 23);

  const double big = est_rel(A, ComplexMatrix(X0 + 1e-2 * E)).est_rel;
  const double mid = est_rel(A, ComplexMatrix(X0 + 1e-4 * E)).est_rel;
  const double small = est_rel(A, ComplexMatrix(X0 + 1e-6 * E)).est_rel;
  CHECK(big > 10.0 * mid);
  CHECK(mid > 10.0 * small);
  CHECK(small < 1e-4);
  CHECK(big < 1.0);
}

TEST_CASE("family members of a seeded low-rank matrix verify below tolerance") {
  const ComplexMatrix A = random_singular(10, 6, 24).A;
  const auto fam = family_from_B(A, check_B_consistency(A, ComplexMatrix(A * A)));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ComplexMatrix X = fam.sample(unit_gaussian_complex(10, 10, mix_seed(seed, 25)));
    const auto rep = est_rel(A, X);
    CHECK(rep.is_solution);
    CHECK(rep.est_rel <= 1e-8);
  }
}

TEST_CASE("pairwise_distinct") {
  const ComplexMatrix A = fixture("example1").A;
  CHECK_FALSE(pairwise_distinct({A, A}, 1e-12));
  CHECK(pairwise_distinct({ComplexMatrix::Zero(3, 3), cid(3)}, 1.0));   // dist sqrt(3)
  CHECK_FALSE(pairwise_distinct({ComplexMatrix::Zero(3, 3), cid(3)}, 2.0));
  CHECK(pairwise_distinct({A}, 1e6));
  CHECK(pairwise_distinct({}, 1e6));
}
