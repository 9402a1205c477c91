#include "ybx/fixtures.hpp"

#include <Eigen/SVD>
#include <limits>

#include "ybx/errors.hpp"
#include "ybx/random.hpp"

namespace ybx {
namespace {

ComplexMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const Index n = static_cast<Index>(rows.size());
  const Index m = static_cast<Index>(rows.begin()->size());
  ComplexMatrix out(n, m);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) {
      out(i, j++) = Complex(v, 0.0);
    }
    ++i;
  }
  return out;
}

TestMatrix example1() {
  TestMatrix t;
  t.id = "example1";
  t.A = from_rows({{1, 1, 1}, {0, 1, 0}, {1, 0, 1}});
  t.known_rank = 2;
  t.known_index = 1;
  t.known_spectrum = std::vector<Complex>{0.0, 1.0, 2.0};
  t.diagonalizable = true;
  t.notes = "diagonalizable 3x3 with spectrum {0,1,2}; admits exactly eight "
            "commuting projectors and four distinct A^2 P products";
  return t;
}

TestMatrix example2() {
  TestMatrix t;
  t.id = "example2";
  t.A = ComplexMatrix::Ones(3, 3);
  t.known_rank = 1;
  t.known_index = 1;
  t.known_spectrum = std::vector<Complex>{3.0, 0.0, 0.0};
  t.diagonalizable = true;
  t.notes = "all-ones 3x3; every commuting projector collapses A^2 P to 0 or A^2";
  return t;
}

TestMatrix nilpotent4() {
  TestMatrix t;
  t.id = "nilpotent4";
  t.A = from_rows({{-2, -7, -8, -19},
                   {0, -6, -6, -12},
                   {0, 3, 2, 7},
                   {1, 2, 3, 6}});
  t.known_rank = 3;
  t.known_index = 4;
  // known_spectrum left unset on purpose: the matrix is nilpotent, but the
  // single eigenvalue is so ill-conditioned that computed eigenvalues land
  // around 1e-4 in magnitude; a 1e-8 spectrum cross-check cannot hold.
  t.diagonalizable = false;
  t.notes = "nilpotent 4x4, one Jordan block of order 4; eigenvalue "
            "computations are strongly ill-conditioned";
  return t;
}

double condition_2norm(const ComplexMatrix& S) {
  Eigen::JacobiSVD<ComplexMatrix> svd(S);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  return smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
}

}  // namespace

TestMatrix fixture(const std::string& id) {
  if (id == "example1") return example1();
  if (id == "example2") return example2();
  if (id == "nilpotent4") return nilpotent4();
  throw UnknownFixture("no fixture named '" + id + "'");
}

std::vector<ComplexMatrix> example1_projectors() {
  const ComplexMatrix Id = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix P2 =
      0.5 * from_rows({{1, 1, 1}, {0, 2, 0}, {1, -1, 1}});
  const ComplexMatrix P3 =
      0.5 * from_rows({{1, 1, 1}, {0, 0, 0}, {1, 1, 1}});
  const ComplexMatrix P4 = from_rows({{0, 0, 0}, {0, 1, 0}, {0, -1, 0}});
  return {ComplexMatrix::Zero(3, 3), P2, P3, P4, Id, Id - P2, Id - P3, Id - P4};
}

TestMatrix random_singular(Index n, Index r, std::uint64_t seed) {
  if (r < 1 || r >= n) {
    throw BadRank("need 1 <= r < n for a rank-r singular product");
  }
  const ComplexMatrix F = gaussian_complex(n, r, mix_seed(seed, 1));
  const ComplexMatrix G = gaussian_complex(r, n, mix_seed(seed, 2));
  TestMatrix t;
  t.id = "rand" + std::to_string(n) + "r" + std::to_string(r);
  t.A = F * G;
  t.known_rank = r;
  t.known_index = 1;
  t.diagonalizable = true;
  t.notes = "seeded random rank-" + std::to_string(r) + " product F*G";
  return t;
}

TestMatrix random_nondiagonalizable(const std::vector<JordanBlockSpec>& blocks,
                                    std::uint64_t seed) {
  Index n = 0;
  Index zero_blocks = 0;
  Index max_zero_size = 0;
  bool any_defective = false;
  for (const auto& b : blocks) {
    if (b.size < 1) throw BadStructure("Jordan block sizes must be positive");
    n += b.size;
    if (b.size >= 2) any_defective = true;
    if (b.eigenvalue == Complex(0.0, 0.0)) {
      ++zero_blocks;
      max_zero_size = std::max(max_zero_size, b.size);
    }
  }
  if (!any_defective) {
    throw BadStructure("need a Jordan block of size >= 2 to be defective");
  }
  if (zero_blocks == 0) {
    throw BadStructure("need a zero eigenvalue to stay singular");
  }

  ComplexMatrix J = ComplexMatrix::Zero(n, n);
  Index offset = 0;
  for (const auto& b : blocks) {
    for (Index i = 0; i < b.size; ++i) {
      J(offset + i, offset + i) = b.eigenvalue;
      if (i + 1 < b.size) J(offset + i, offset + i + 1) = 1.0;
    }
    offset += b.size;
  }

  ComplexMatrix S;
  bool found = false;
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    S = gaussian_complex(n, n, mix_seed(seed, 100 + attempt));
    if (condition_2norm(S) <= 100.0) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw BadStructure("no well-conditioned similarity factor found");
  }

  Eigen::PartialPivLU<ComplexMatrix> lu(S);
  TestMatrix t;
  t.id = "jordan" + std::to_string(n);
  t.A = S * J * lu.inverse();
  t.known_rank = n - zero_blocks;
  t.known_index = max_zero_size;
  // known_spectrum stays unset: defective eigenvalues move by far more than
  // the 1e-8 cross-check budget under rounding.
  t.diagonalizable = false;
  t.notes = "Jordan-built non-diagonalizable matrix, kappa(S) <= 100";
  return t;
}

std::vector<TestMatrix> standard_corpus(std::uint64_t seed) {
  std::vector<TestMatrix> corpus;
  corpus.reserve(15);
  corpus.push_back(example1());
  corpus.push_back(example2());
  corpus.push_back(nilpotent4());
  corpus.push_back(random_singular(6, 3, mix_seed(seed, 10)));
  corpus.push_back(random_singular(10, 6, mix_seed(seed, 11)));
  corpus.push_back(random_singular(14, 9, mix_seed(seed, 12)));
  corpus.push_back(random_singular(19, 12, mix_seed(seed, 13)));
  corpus.push_back(random_singular(20, 13, mix_seed(seed, 14)));

  using Blocks = std::vector<JordanBlockSpec>;
  // Index-1 entries (every zero block simple): the zero eigenvalue stays
  // well-conditioned, only the nonzero defective ones wander.
  corpus.push_back(random_nondiagonalizable(
      Blocks{{2, Complex(2, 0)}, {2, Complex(-1, 0)}, {1, 0.0}},
      mix_seed(seed, 20)));
  corpus.push_back(random_nondiagonalizable(
      Blocks{{3, Complex(1, 1)}, {2, 0.0}, {2, Complex(-2, 0)}},
      mix_seed(seed, 21)));
  corpus.push_back(random_nondiagonalizable(
      Blocks{{3, Complex(2, 0)}, {3, Complex(-1, 1)}, {2, Complex(1, 0)}, {1, 0.0}},
      mix_seed(seed, 22)));
  corpus.push_back(random_nondiagonalizable(
      Blocks{{4, 0.0}, {3, Complex(2, -1)}, {2, Complex(1, 0)}, {2, Complex(-3, 0)}},
      mix_seed(seed, 23)));
  corpus.push_back(random_nondiagonalizable(
      Blocks{{2, Complex(5, 0)}, {2, Complex(-5, 0)}, {3, Complex(0, 2)},
             {3, Complex(1, 0)}, {2, 0.0}, {1, 0.0}},
      mix_seed(seed, 24)));
  corpus.push_back(random_nondiagonalizable(
      Blocks{{4, Complex(3, 0)}, {4, Complex(-2, 0)}, {4, Complex(1, 1)},
             {3, Complex(4, 0)}, {1, 0.0}},
      mix_seed(seed, 25)));
  corpus.push_back(random_nondiagonalizable(
      Blocks{{5, Complex(2, 0)}, {4, Complex(-1, 0)}, {3, Complex(0, 3)},
             {3, Complex(-2, -2)}, {2, 0.0}, {1, Complex(5, 0)}},
      mix_seed(seed, 26)));
  return corpus;
}

}  // namespace ybx
