#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybx/types.hpp"

namespace ybx {

// A corpus entry: the matrix plus whatever ground truth its construction
// pins down. Metadata left unset means the construction does not certify it
// at working precision (e.g. spectra of matrices with defective eigenvalues,
// which float far from their exact values).
struct TestMatrix {
  std::string id;
  ComplexMatrix A;
  std::optional<Index> known_rank;
  std::optional<Index> known_index;
  std::optional<std::vector<Complex>> known_spectrum;  // full multiset
  bool diagonalizable = false;
  std::string notes;
};

// Exact hand-entered matrices. ids: example1 (3x3, spectrum {0,1,2}, eight
// commuting projectors), example2 (3x3 all-ones), nilpotent4 (4x4 with a
// single Jordan block of order 4). Throws UnknownFixture otherwise.
TestMatrix fixture(const std::string& id);

// The eight commuting projectors of the example1 matrix, in the conventional
// order: 0, P2, P3, P4, I, I-P2, I-P3, I-P4.
std::vector<ComplexMatrix> example1_projectors();

// A = F G with F (n x r), G (r x n) seeded standard-normal complex; rank r
// with probability 1 and deterministic per seed. Throws BadRank unless
// 1 <= r < n.
TestMatrix random_singular(Index n, Index r, std::uint64_t seed);

struct JordanBlockSpec {
  Index size = 1;
  Complex eigenvalue = 0.0;
};

// A = S J S^{-1} with J assembled from the requested Jordan blocks and S a
// seeded random matrix kept well-conditioned (kappa <= 100) by rejection.
// Requires at least one block of size >= 2 (so A is defective) and at least
// one zero eigenvalue (so A is singular); throws BadStructure otherwise.
TestMatrix random_nondiagonalizable(const std::vector<JordanBlockSpec>& blocks,
                                    std::uint64_t seed);

// Exactly 15 singular matrices, sizes 3 through 20: the three fixtures, five
// random rank-deficient products (including 19x19 rank 12 and 20x20 rank 13),
// and seven Jordan-built non-diagonalizable matrices mixing index-1 and
// higher-index zero eigenvalues. Deterministic per seed.
std::vector<TestMatrix> standard_corpus(std::uint64_t seed);

}  // namespace ybx
