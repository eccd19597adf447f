#pragma once

namespace qdm::tol {

// Max |X - X^dagger| entry accepted before an input is rejected as
// non-Hermitian; anything below is symmetrized away.
inline constexpr double herm = 1e-12;

// |tr(rho) - 1| accepted for a density matrix.
inline constexpr double trace = 1e-12;

// Eigenvalues of a density matrix may dip this far below zero and the
// state is still accepted as positive semidefinite.
inline constexpr double psd_floor = -1e-10;

// Eigenvalues with |lambda| below this are treated as zero in negativity
// sums and negative-eigenvalue counts.
inline constexpr double eig_zero = 1e-10;

// Gram-matrix defect accepted for a measurement basis.
inline constexpr double basis = 1e-10;

// Margin below which a hierarchy inequality counts as violated.
inline constexpr double margin = 1e-10;

}  // namespace qdm::tol
