#pragma once

#include <vector>

#include "qdm/matrix.hpp"

namespace qdm {

struct Spectrum {
  std::vector<double> eigenvalues;  // sorted non-increasing
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Input must be square and Hermitian within tol::herm; it is symmetrized
// before iterating. Deterministic: no randomized pivoting, fixed sweep order.
Spectrum eig_hermitian(const ComplexMatrix& x);

// Eigenvalues only (skips accumulating the rotations), sorted non-increasing.
std::vector<double> eig_values(const ComplexMatrix& x);

}  // namespace qdm
