#pragma once

#include "qdm/density.hpp"
#include "qdm/matrix.hpp"

namespace qdm {

enum class Subsystem { a, b };

// Schatten p-norm of a Hermitian matrix: (sum_i |lambda_i|^p)^(1/p).
// p = 1 is the trace norm, p = 2 the Hilbert-Schmidt norm (evaluated as the
// Frobenius norm, which coincides for Hermitian input). p < 1 is rejected.
double schatten_norm(const ComplexMatrix& x, double p);

// Transpose on the A index only: <ij|out|kl> = <kj|rho|il>.
// Hermitian and trace-preserving; applying it twice gives rho back.
ComplexMatrix partial_transpose(const DensityMatrix& rho);

// Reduced state of the kept subsystem.
ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Reinterpret the same matrix under a new bipartition; entries unchanged,
// computational-basis ordering preserved. Requires m'*n' = m*n.
DensityMatrix repartition(const DensityMatrix& rho, Bipartition new_dims);

// Measurement (dephasing) map sum_k (P_k (x) I) rho (P_k (x) I) for the
// rank-1 projectors P_k onto the basis vectors. Output is classical-quantum.
DensityMatrix dephase_a(const DensityMatrix& rho, const MeasurementBasis& basis);

}  // namespace qdm
