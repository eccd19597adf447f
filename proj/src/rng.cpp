#include "qdm/rng.hpp"

#include <cmath>
#include <numbers>

namespace qdm {

double GaussianRng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double GaussianRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;          // [0, 1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

cplx GaussianRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::uint64_t mix_seed(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ull;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
  return v ^ (v >> 31);
}

ComplexMatrix haar_unitary(std::size_t m, std::uint64_t seed) {
  GaussianRng rng(seed);
  ComplexMatrix g(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) g(r, c) = rng.complex_normal();

  // Modified Gram-Schmidt on columns, two passes for orthogonality. This is
  // the QR factorization whose R has a positive real diagonal, and that Q is
  // Haar-distributed when G is Ginibre.
  ComplexMatrix q = g;
  for (std::size_t c = 0; c < m; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        cplx overlap{0.0, 0.0};
        for (std::size_t r = 0; r < m; ++r) overlap += std::conj(q(r, prev)) * q(r, c);
        for (std::size_t r = 0; r < m; ++r) q(r, c) -= overlap * q(r, prev);
      }
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < m; ++r) nrm += std::norm(q(r, c));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < m; ++r) q(r, c) /= nrm;
  }
  return q;
}

}  // namespace qdm
