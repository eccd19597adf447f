#pragma once

#include <cstdint>
#include <vector>

#include "qdm/density.hpp"
#include "qdm/matrix.hpp"

namespace qdm {

// Swap operator F = sum_kl |kl><lk| on an m x m bipartite space.
ComplexMatrix swap_operator(std::size_t m);

// Werner state ((m - z) I + (m z - 1) F) / (m^3 - m), z in [-1, 1].
// tr(F rho) = z; commutes with U (x) U for every unitary U.
DensityMatrix werner(std::size_t m, double z);

// |Phi><Phi| with |Phi> = (1/sqrt(m)) sum_k |kk>, as an m x m state.
DensityMatrix max_entangled(std::size_t m);

// Classical-quantum state sum_i p_i |i><i| (x) blocks[i].
// probs must be non-negative and sum to 1; blocks must share one dimension
// and each be a valid density matrix.
DensityMatrix cq_state(const std::vector<double>& probs,
                       const std::vector<ComplexMatrix>& blocks);

// Ginibre-induced random state G G^dagger / tr(G G^dagger) with G a
// dim x rank matrix of independent standard complex Gaussians drawn from a
// seeded deterministic stream. Same seed, same matrix.
ComplexMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

// random_density wrapped with a bipartition (validated on construction).
DensityMatrix random_state(Bipartition dims, std::size_t rank, std::uint64_t seed);

}  // namespace qdm
