#include "qdm/states.hpp"

#include <cmath>
#include <sstream>

#include "qdm/error.hpp"
#include "qdm/rng.hpp"
#include "qdm/tolerances.hpp"

namespace qdm {

ComplexMatrix swap_operator(std::size_t m) {
  ComplexMatrix f(m * m, m * m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) f(k * m + l, l * m + k) = 1.0;
  return f;
}

DensityMatrix werner(std::size_t m, double z) {
  if (m < 2) throw Error(Errc::invalid_dim, "Werner state needs local dimension >= 2");
  if (!(z >= -1.0 && z <= 1.0)) {
    std::ostringstream msg;
    msg << "Werner parameter z must lie in [-1, 1], got " << z;
    throw Error(Errc::invalid_z, msg.str());
  }
  const double md = static_cast<double>(m);
  const double denom = md * md * md - md;
  ComplexMatrix mat = swap_operator(m);
  mat *= (md * z - 1.0) / denom;
  const double diag = (md - z) / denom;
  for (std::size_t i = 0; i < m * m; ++i) mat(i, i) += diag;
  return DensityMatrix({m, m}, std::move(mat));
}

DensityMatrix max_entangled(std::size_t m) {
  if (m < 2) throw Error(Errc::invalid_dim, "maximally entangled state needs dimension >= 2");
  ComplexMatrix mat(m * m, m * m);
  const double amp = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) mat(k * m + k, l * m + l) = amp;
  return DensityMatrix({m, m}, std::move(mat));
}

DensityMatrix cq_state(const std::vector<double>& probs,
                       const std::vector<ComplexMatrix>& blocks) {
  const std::size_t m = probs.size();
  if (m == 0 || blocks.size() != m)
    throw Error(Errc::block_dimension_mismatch,
                "need one block per probability entry");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw Error(Errc::bad_probabilities, "probabilities must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > tol::trace) {
    std::ostringstream msg;
    msg << "probabilities sum to " << total << ", not 1";
    throw Error(Errc::bad_probabilities, msg.str());
  }
  const std::size_t n = blocks.front().rows();
  for (const ComplexMatrix& b : blocks)
    if (!b.square() || b.rows() != n)
      throw Error(Errc::block_dimension_mismatch, "blocks must be square with one shared dimension");

  ComplexMatrix mat(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        mat(i * n + r, i * n + c) = probs[i] * blocks[i](r, c);
  // block validity (Hermitian, PSD, unit trace) is enforced by the
  // DensityMatrix invariants on the assembled state
  return DensityMatrix({m, n}, std::move(mat));
}

ComplexMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (rank < 1 || rank > dim) {
    std::ostringstream msg;
    msg << "rank must lie in [1, " << dim << "], got " << rank;
    throw Error(Errc::bad_rank, msg.str());
  }
  GaussianRng rng(seed);
  ComplexMatrix g(dim, rank);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < rank; ++c) g(r, c) = rng.complex_normal();

  ComplexMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c <= r; ++c) {
      cplx acc{0.0, 0.0};
      for (std::size_t k = 0; k < rank; ++k) acc += g(r, k) * std::conj(g(c, k));
      out(r, c) = acc;
      out(c, r) = std::conj(acc);
    }
  const double tr = out.trace().real();
  out *= cplx{1.0 / tr, 0.0};
  return out;
}

DensityMatrix random_state(Bipartition dims, std::size_t rank, std::uint64_t seed) {
  return DensityMatrix(dims, random_density(dims.total(), rank, seed));
}

}  // namespace qdm
