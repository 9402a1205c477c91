#pragma once

#include <cstdint>
#include <random>

#include "ybx/types.hpp"

namespace ybx {

// Deterministic standard-normal sampler. std::normal_distribution is
// implementation-defined, so Box-Muller over mt19937_64 keeps seeded output
// identical across standard libraries.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    // 53-bit mantissa double in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Stable per-purpose seed derivation (splitmix64 over seed XOR stream id).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RealMatrix gaussian_real(Index rows, Index cols, std::uint64_t seed);
ComplexMatrix gaussian_complex(Index rows, Index cols, std::uint64_t seed);

// Gaussian complex matrix normalized to unit Frobenius norm; the default for
// the free parameters (Y, Z, V) of the solution families.
ComplexMatrix unit_gaussian_complex(Index rows, Index cols, std::uint64_t seed);

}  // namespace ybx
