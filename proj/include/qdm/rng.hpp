#pragma once

#include <cstdint>
#include <random>

#include "qdm/matrix.hpp"

namespace qdm {

// Deterministic Gaussian source: std::mt19937_64 (algorithm fixed by the
// C++ standard) feeding a Box-Muller transform. Uniforms are built as
// ((x >> 11) + 1) * 2^-53, so log never sees zero. Same seed, same stream.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

  double normal();           // N(0, 1)
  cplx complex_normal();     // independent N(0, 1) real and imaginary parts
  double uniform();          // [0, 1)
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// SplitMix64 mixing step; used to derive independent child seeds from a
// root seed as mix(root ^ index).
std::uint64_t mix_seed(std::uint64_t v);

// Haar-distributed m x m unitary: QR of a complex Ginibre matrix by
// modified Gram-Schmidt with the R diagonal phase-fixed to be positive.
ComplexMatrix haar_unitary(std::size_t m, std::uint64_t seed);

}  // namespace qdm
