#include "ybx/random.hpp"

namespace ybx {

RealMatrix gaussian_real(Index rows, Index cols, std::uint64_t seed) {
  GaussianStream g(seed);
  RealMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = g.normal();
  return m;
}

ComplexMatrix gaussian_complex(Index rows, Index cols, std::uint64_t seed) {
  GaussianStream g(seed);
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      double re = g.normal();
      double im = g.normal();
      m(i, j) = Complex(re, im);
    }
  return m;
}

ComplexMatrix unit_gaussian_complex(Index rows, Index cols, std::uint64_t seed) {
  ComplexMatrix m = gaussian_complex(rows, cols, seed);
  double n = m.norm();
  if (n > 0.0) m /= n;
  return m;
}

}  // namespace ybx
