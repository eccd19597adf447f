#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qdm/density.hpp"
#include "qdm/matrix.hpp"

namespace qdm {

// Pauli matrices; index 0 -> sigma_x, 1 -> sigma_y, 2 -> sigma_z.
ComplexMatrix pauli(std::size_t i);

// Generalized Gell-Mann basis of traceless Hermitian n x n matrices with
// tr(beta_i beta_j) = 2 delta_ij, in a fixed canonical order:
//   [0, S)      symmetric   E_ab + E_ba            for a < b, lexicographic
//   [S, 2S)     antisym     -i (E_ab - E_ba)       for a < b, lexicographic
//   [2S, 2S+n-1) diagonal   sqrt(2/(l(l+1))) (sum_{j<l} E_jj - l E_ll), l = 1..n-1
// with S = n(n-1)/2. For n = 2 this is exactly (sigma_x, sigma_y, sigma_z).
ComplexMatrix gell_mann(std::size_t n, std::size_t index);

// Correlation data of a 2 x n state. All entries are raw expectation values:
//   x[i]   = tr(rho (sigma_i (x) I))
//   y[j]   = tr(rho (I (x) beta_j))
//   t[i,j] = tr(rho (sigma_i (x) beta_j))
// The state is recovered as
//   rho = I/(2n) + sum_i x_i/(2n) sigma_i(x)I + sum_j y_j/4 I(x)beta_j
//         + sum_ij t_ij/4 sigma_i(x)beta_j.
struct BlochForm {
  std::array<double, 3> x{};
  std::vector<double> y;
  std::vector<double> t;  // row-major 3 x (n^2 - 1)
  std::size_t dim_b = 0;

  double t_at(std::size_t i, std::size_t j) const { return t[i * (dim_b * dim_b - 1) + j]; }
};

BlochForm decompose_2xn(const DensityMatrix& rho);  // requires dim_a == 2
ComplexMatrix reconstruct_2xn(const BlochForm& form);

// Exact unnormalized Hilbert-Schmidt discord of a 2 x n state:
//   D2 = tr(G) - lambda_max(G),  G = x x^T / (2n) + T T^T / 4.
// This is the minimum over all rank-1 projective measurements on A of
// |rho - dephased(rho)|_2^2, obtained from the Parseval expansion of rho in
// the orthonormal product-operator basis.
double gd2_closed_form(const DensityMatrix& rho);

}  // namespace qdm
