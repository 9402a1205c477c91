#include <doctest.h>

#include <cmath>
#include <vector>

#include "ybx/fixtures.hpp"
#include "ybx/linalg.hpp"
#include "ybx/projectors.hpp"
#include "ybx/random.hpp"
#include "ybx/verification.hpp"

using namespace ybx;

namespace {

ComplexMatrix cid(Index n) { return ComplexMatrix::Identity(n, n); }

bool same(const ComplexMatrix& A, const ComplexMatrix& B, double tol = 1e-10) {
  return (A - B).norm() <= tol;
}

}  // namespace

TEST_CASE("certify_projector measures residuals and validity") {
  const ComplexMatrix A = fixture("example1").A;

  SUBCASE("a true commuting projector certifies valid") {
    const auto cert = certify_projector(A, example1_projectors()[1],
                                        ProjectorSource::user);
    CHECK(cert.valid);
    CHECK(cert.idempotency_residual <= 1e-12);
    CHECK(cert.commutation_residual <= 1e-12);
    CHECK(cert.source == ProjectorSource::user);
  }

  SUBCASE("a non-idempotent matrix certifies invalid") {
    const auto cert = certify_projector(A, ComplexMatrix(2.0 * cid(3)),
                                        ProjectorSource::user);
    CHECK_FALSE(cert.valid);
    CHECK(cert.idempotency_residual > 1.0);
  }

  SUBCASE("an idempotent that fails to commute certifies invalid") {
    ComplexMatrix swap = ComplexMatrix::Zero(2, 2);
    swap(0, 1) = 1.0;
    swap(1, 0) = 1.0;
    ComplexMatrix P = ComplexMatrix::Zero(2, 2);
    P(0, 0) = 1.0;
    const auto cert = certify_projector(swap, P, ProjectorSource::user);
    CHECK_FALSE(cert.valid);
    CHECK(cert.idempotency_residual <= 1e-15);
    CHECK(cert.commutation_residual > 1.0);
  }
}

TEST_CASE("drazin_projector") {
  const ComplexMatrix A = fixture("example1").A;
  const auto printed = example1_projectors();

  SUBCASE("M = A gives A A^D, one of the printed projectors") {
    const auto cert = drazin_projector(A, A);
    CHECK(cert.valid);
    CHECK(cert.source == ProjectorSource::drazin);
    CHECK((cert.P - A * drazin(A)).norm() <= 1e-12);
    CHECK(same(cert.P, printed[1]));  // identity minus the kernel projector
  }

  SUBCASE("M = I gives the identity") {
    const auto cert = drazin_projector(A, cid(3));
    CHECK(cert.valid);
    CHECK(same(cert.P, cid(3)));
  }

  SUBCASE("M = A - 2I lands on a printed projector") {
    const auto cert = drazin_projector(A, ComplexMatrix(A - 2.0 * cid(3)));
    CHECK(cert.valid);
    bool found = false;
    for (const auto& P : printed) found = found || same(cert.P, P);
    CHECK(found);
    CHECK(same(cert.P, printed[6]));  // complement of the eigenvalue-2 projector
  }

  SUBCASE("non-commuting M is rejected") {
    const ComplexMatrix M = gaussian_complex(3, 3, 13);
    CHECK_THROWS_AS((void)drazin_projector(A, M), NonCommutingInput);
  }
}

TEST_CASE("commuting_poly_matrix") {
  const ComplexMatrix A = fixture("example1").A;

  SUBCASE("f(x) = x at lambda 0 returns A itself") {
    const ComplexMatrix M = commuting_poly_matrix(A, 0.0, {0.0, 1.0});
    CHECK(same(M, A, 1e-13));
  }

  SUBCASE("constant f returns zero") {
    const ComplexMatrix M = commuting_poly_matrix(A, 1.0, {Complex(4.0, 1.0)});
    CHECK(frob(M) <= 1e-14);
  }

  SUBCASE("f(x) = x^2 at lambda 1 returns the singular A^2 - I") {
    const ComplexMatrix M = commuting_poly_matrix(A, 1.0, {0.0, 0.0, 1.0});
    CHECK(same(M, ComplexMatrix(A * A - cid(3)), 1e-13));
    CHECK(rank(M) == 2);
    CHECK((A * M - M * A).norm() <= 1e-13);
  }

  SUBCASE("lambda outside the spectrum is rejected") {
    CHECK_THROWS_AS((void)commuting_poly_matrix(A, 7.0, {0.0, 1.0}),
                    NotAnEigenvalue);
  }
}

TEST_CASE("spectral_projector") {
  SUBCASE("diagonal case") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = 1.0;
    const auto cert = spectral_projector(D, 0.0);
    CHECK(cert.valid);
    ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
    expect(1, 1) = 1.0;
    CHECK(same(cert.P, expect));
  }

  SUBCASE("the three eigenprojectors of the rank-2 example match the printed list") {
    const ComplexMatrix A = fixture("example1").A;
    const auto printed = example1_projectors();
    const auto G0 = spectral_projector(A, 0.0);
    const auto G1 = spectral_projector(A, 1.0);
    const auto G2 = spectral_projector(A, 2.0);
    for (const auto* c : {&G0, &G1, &G2}) {
      CHECK(c->valid);
      // trace of a projector equals its rank and tolerates the ~1e-12
      // Drazin roundoff that trips an SVD rank count
      CHECK(std::abs(c->P.trace() - Complex(1.0)) <= 1e-9);
    }
    CHECK(same(G0.P, printed[5]));
    CHECK(same(G1.P, printed[3]));
    CHECK(same(G2.P, printed[2]));
  }

  SUBCASE("rank equals algebraic multiplicity") {
    // S diag(5,5,0) S^{-1} with a seeded similarity
    const ComplexMatrix S = gaussian_complex(3, 3, 5);
    REQUIRE(rank(S) == 3);
    ComplexMatrix D = ComplexMatrix::Zero(3, 3);
    D(0, 0) = 5.0;
    D(1, 1) = 5.0;
    const ComplexMatrix A = S * D * S.inverse();
    const auto cert = spectral_projector(A, 5.0);
    CHECK(cert.valid);
    CHECK(rank(cert.P) == 2);
  }

  SUBCASE("lambda outside the spectrum is rejected, not silently degenerate") {
    CHECK_THROWS_AS((void)spectral_projector(fixture("example1").A, 7.0),
                    NotAnEigenvalue);
  }
}

TEST_CASE("complementary_projector") {
  const ComplexMatrix A = fixture("example1").A;

  SUBCASE("diagonal case") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = 1.0;
    const auto cert = complementary_projector(D, 0.0);
    CHECK(cert.valid);
    CHECK(same(cert.P, D));
  }

  SUBCASE("complement plus spectral projector is the identity exactly") {
    for (double lam : {0.0, 1.0, 2.0}) {
      const auto G = spectral_projector(A, lam);
      const auto P = complementary_projector(A, lam);
      CHECK(frob(ComplexMatrix(G.P + P.P - cid(3))) == 0.0);
      CHECK(P.valid);
    }
  }

  SUBCASE("complement at one eigenvalue is the sum of the other eigenprojectors") {
    const auto P2 = complementary_projector(A, 2.0);
    const ComplexMatrix sum01 =
        spectral_projector(A, 0.0).P + spectral_projector(A, 1.0).P;
    CHECK(same(P2.P, sum01, 1e-10));
  }
}

TEST_CASE("sum_projector") {
  const ComplexMatrix A = fixture("example1").A;

  SUBCASE("all eigenvalues sum to the identity") {
    const auto cert = sum_projector(A, {0, 1, 2});
    CHECK(cert.valid);
    CHECK((cert.P - cid(3)).norm() <= 1e-8 * 3);
  }

  SUBCASE("singletons reproduce the spectral projectors") {
    const auto clusters = distinct_eigenvalues(A);
    for (int i = 0; i < 3; ++i) {
      const auto cert = sum_projector(A, {i});
      CHECK(same(cert.P, spectral_projector(A, clusters[i].value).P, 1e-12));
    }
  }

  SUBCASE("a two-element subset is a valid rank-2 projector") {
    const auto cert = sum_projector(A, {0, 1});
    CHECK(cert.valid);
    CHECK(rank(cert.P) == 2);
  }

  SUBCASE("rejections") {
    CHECK_THROWS_AS((void)sum_projector(A, {}), EmptyGamma);
    CHECK_THROWS_AS((void)sum_projector(A, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)sum_projector(A, {5}), std::invalid_argument);
  }
}

TEST_CASE("sign_shift_alphas") {
  SUBCASE("rank-2 example yields the two interior midpoints") {
    const auto alphas = sign_shift_alphas(fixture("example1").A);
    CHECK_FALSE(alphas.rotated);
    REQUIRE(alphas.values.size() == 2);
    CHECK(alphas.values[0] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(alphas.values[1] == doctest::Approx(-1.5).epsilon(1e-12));
  }

  SUBCASE("a single shared real part yields nothing") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = 2.0;
    D(1, 1) = Complex(2.0, 1.0);
    const auto alphas = sign_shift_alphas(D);
    CHECK(alphas.values.empty());
    CHECK_FALSE(alphas.rotated);
  }

  SUBCASE("symmetric real spectrum puts the midpoint on the axis") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = -1.0;
    D(1, 1) = 1.0;
    const auto alphas = sign_shift_alphas(D);
    REQUIRE(alphas.values.size() == 1);
    CHECK(alphas.values[0] == doctest::Approx(0.0));
    CHECK_FALSE(alphas.rotated);
  }

  SUBCASE("purely imaginary spectrum rotates first") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = Complex(0.0, 1.0);
    D(1, 1) = Complex(0.0, -1.0);
    const auto alphas = sign_shift_alphas(D);
    CHECK(alphas.rotated);
    REQUIRE(alphas.values.size() == 1);
    CHECK(alphas.values[0] == doctest::Approx(0.0));
  }
}

TEST_CASE("sign_shift_projectors") {
  const ComplexMatrix A = fixture("example1").A;
  const auto printed = example1_projectors();

  SUBCASE("interior shift splits the spectrum at the midpoint") {
    const auto [plus, minus] = sign_shift_projectors(A, -0.5);
    CHECK(plus.valid);
    CHECK(minus.valid);
    CHECK(rank(plus.P) == 2);
    CHECK(rank(minus.P) == 1);
    CHECK(same(plus.P, printed[1]));

    const auto [plus2, minus2] = sign_shift_projectors(A, -1.5);
    CHECK(rank(plus2.P) == 1);
    CHECK(same(plus2.P, printed[2]));
  }

  SUBCASE("any shift in the same gap gives the same projectors") {
    const auto a = sign_shift_projectors(A, -0.3);
    const auto b = sign_shift_projectors(A, -0.7);
    CHECK((a.first.P - b.first.P).norm() <= 1e-8);
    CHECK((a.second.P - b.second.P).norm() <= 1e-8);
  }

  SUBCASE("a shift beyond the spectral radius is trivially the identity") {
    const auto [plus, minus] = sign_shift_projectors(A, 10.0);
    CHECK(same(plus.P, cid(3), 1e-9));
    CHECK(frob(minus.P) <= 1e-9);
  }

  SUBCASE("a shift landing an eigenvalue on the axis is rejected") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = -1.0;
    D(1, 1) = 1.0;
    CHECK_THROWS_AS((void)sign_shift_projectors(D, 1.0), ImaginaryAxisEigenvalue);
    // the computed midpoint alpha = 0 itself is fine here
    const auto [plus, minus] = sign_shift_projectors(D, 0.0);
    ComplexMatrix e1 = ComplexMatrix::Zero(2, 2);
    e1(1, 1) = 1.0;
    CHECK(same(plus.P, e1));
  }

  SUBCASE("rotated flag applies the shift to -iA but certifies against A") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = Complex(0.0, 1.0);
    D(1, 1) = Complex(0.0, -1.0);
    const auto [plus, minus] = sign_shift_projectors(D, 0.0, {}, true);
    CHECK(plus.valid);
    CHECK(minus.valid);
    ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    CHECK(same(plus.P, e0));
    CHECK(same(ComplexMatrix(plus.P + minus.P), cid(2), 1e-12));
  }
}

TEST_CASE("eigen_replaced_sign_projectors") {
  SUBCASE("diagonal case: replacing -1 by 2 pushes everything positive") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = 1.0;
    D(1, 1) = -1.0;
    const auto [plus, minus] = eigen_replaced_sign_projectors(D, -1.0, 2.0);
    CHECK(plus.valid);
    CHECK(same(plus.P, cid(2), 1e-12));
    CHECK(frob(minus.P) <= 1e-12);
  }

  SUBCASE("replacing the zero eigenvalue of the rank-2 example by -1") {
    const ComplexMatrix A = fixture("example1").A;
    const auto [plus, minus] = eigen_replaced_sign_projectors(A, 0.0, -1.0);
    CHECK(plus.valid);
    CHECK(minus.valid);
    CHECK(rank(plus.P) == 2);
    CHECK(rank(minus.P) == 1);
    // minus is the kernel projector: the replacement moved only lambda = 0
    CHECK(same(minus.P, spectral_projector(A, 0.0).P, 1e-9));
  }

  SUBCASE("the replaced matrix carries the edited spectrum") {
    const ComplexMatrix A = fixture("example1").A;
    const ComplexMatrix G = spectral_projector(A, 0.0).P;
    const ComplexMatrix replaced = A + (Complex(-1.0) - Complex(0.0)) * G;
    const auto cl = distinct_eigenvalues(replaced);
    REQUIRE(cl.size() == 3);
    // -1 and 1 tie in magnitude, so match values without fixing the order
    for (const Complex want : {Complex(-1.0), Complex(1.0), Complex(2.0)}) {
      bool found = false;
      for (const auto& c : cl) found = found || std::abs(c.value - want) < 1e-9;
      CHECK(found);
    }
  }

  SUBCASE("rejects lambda outside the spectrum") {
    CHECK_THROWS_AS(
        (void)eigen_replaced_sign_projectors(fixture("example1").A, 9.0, 1.0),
        NotAnEigenvalue);
  }
}

TEST_CASE("projector algebra invariants") {
  const ComplexMatrix A = fixture("example1").A;
  const auto clusters = distinct_eigenvalues(A);
  REQUIRE(clusters.size() == 3);
  std::vector<ComplexMatrix> G;
  for (const auto& c : clusters) G.push_back(spectral_projector(A, c.value).P);
  const Index n = A.rows();

  SUBCASE("eigenprojectors annihilate each other") {
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = 0; j < G.size(); ++j)
        if (i != j) CHECK((G[i] * G[j]).norm() <= 1e-8 * n);
  }

  SUBCASE("eigenprojectors resolve the identity") {
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto& g : G) sum += g;
    CHECK((sum - cid(n)).norm() <= 1e-8 * n);
  }

  SUBCASE("complements of valid projectors are valid") {
    for (const auto& g : G) {
      const auto cert =
          certify_projector(A, ComplexMatrix(cid(n) - g), ProjectorSource::user);
      CHECK(cert.valid);
    }
  }

  SUBCASE("complementary projectors commute pairwise") {
    std::vector<ComplexMatrix> P;
    for (const auto& c : clusters)
      P.push_back(complementary_projector(A, c.value).P);
    for (std::size_t i = 0; i < P.size(); ++i)
      for (std::size_t j = i + 1; j < P.size(); ++j)
        CHECK((P[i] * P[j] - P[j] * P[i]).norm() <= 1e-8);
  }

  SUBCASE("the subset sums enumerate 2^s - 1 distinct projectors") {
    std::vector<ComplexMatrix> sums;
    for (int mask = 1; mask < 8; ++mask) {
      std::vector<int> gamma;
      for (int i = 0; i < 3; ++i)
        if (mask & (1 << i)) gamma.push_back(i);
      sums.push_back(sum_projector(A, gamma).P);
    }
    CHECK(sums.size() == 7);
    CHECK(pairwise_distinct(sums, 1e-6));
  }
}
