#include "qdm/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qdm/error.hpp"
#include "qdm/kernels.hpp"
#include "qdm/tolerances.hpp"

namespace qdm {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  const std::size_t d = a.rows();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (r != c) acc += std::norm(a(r, c));
  return std::sqrt(acc);
}

ComplexMatrix checked_hermitian_input(const ComplexMatrix& x) {
  if (!x.square()) throw Error(Errc::non_square, "eigendecomposition of a non-square matrix");
  const double defect = x.hermiticity_defect();
  if (defect >= tol::herm) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max asymmetry " << defect;
    throw Error(Errc::not_hermitian, msg.str());
  }
  return x.symmetrized();
}

// Core Jacobi loop. vt, when non-null, accumulates the eigenvector matrix
// transposed (rows of vt are eigenvectors), so both the matrix rows and the
// vector updates run through the contiguous rotate_pair kernel; only the
// column update of the working matrix walks with a stride.
void jacobi(ComplexMatrix& a, ComplexMatrix* vt) {
  const std::size_t d = a.rows();
  if (vt) *vt = ComplexMatrix::identity(d);
  if (d < 2) return;

  const double scale = a.frobenius_norm();
  if (scale == 0.0) return;
  const double stop = 1e-14 * scale;
  const double skip = stop / static_cast<double>(d);
  const int max_sweeps = 64;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= stop) return;
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= skip) continue;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (app - aqq) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = (t * c / r) * apq;

        // rows: A <- U^dagger A
        kernels::rotate_pair(c, std::conj(s), a.row(p), a.row(q), d);
        // columns: A <- A U
        for (std::size_t k = 0; k < d; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp + std::conj(s) * akq;
          a(k, q) = c * akq - s * akp;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (vt) kernels::rotate_pair(c, s, vt->row(p), vt->row(q), d);
      }
    }
  }
  if (offdiag_norm(a) > stop) {
    std::ostringstream msg;
    msg << "Jacobi eigensolver did not converge: off-diagonal norm " << offdiag_norm(a);
    throw Error(Errc::numerical_failure, msg.str());
  }
}

std::vector<std::size_t> descending_order(const std::vector<double>& vals) {
  std::vector<std::size_t> idx(vals.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return vals[i] > vals[j]; });
  return idx;
}

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& x) {
  ComplexMatrix a = checked_hermitian_input(x);
  const std::size_t d = a.rows();
  ComplexMatrix vt;
  jacobi(a, &vt);

  std::vector<double> vals(d);
  for (std::size_t i = 0; i < d; ++i) vals[i] = a(i, i).real();
  const auto order = descending_order(vals);

  Spectrum out;
  out.eigenvalues.resize(d);
  out.eigenvectors = ComplexMatrix(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    out.eigenvalues[j] = vals[order[j]];
    for (std::size_t r = 0; r < d; ++r) out.eigenvectors(r, j) = vt(order[j], r);
  }
  return out;
}

std::vector<double> eig_values(const ComplexMatrix& x) {
  ComplexMatrix a = checked_hermitian_input(x);
  const std::size_t d = a.rows();
  jacobi(a, nullptr);

  std::vector<double> vals(d);
  for (std::size_t i = 0; i < d; ++i) vals[i] = a(i, i).real();
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

}  // namespace qdm
