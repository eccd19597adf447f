#include "qdm/linalg.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qdm/eig.hpp"
#include "qdm/error.hpp"
#include "qdm/kernels.hpp"
#include "qdm/tolerances.hpp"

namespace qdm {

double schatten_norm(const ComplexMatrix& x, double p) {
  if (p < 1.0) {
    std::ostringstream msg;
    msg << "Schatten order must be >= 1, got " << p;
    throw Error(Errc::invalid_order, msg.str());
  }
  if (!x.square()) throw Error(Errc::non_square, "Schatten norm of a non-square matrix");
  if (p == 2.0) {
    const double defect = x.hermiticity_defect();
    if (defect >= tol::herm) {
      std::ostringstream msg;
      msg << "matrix is not Hermitian: max asymmetry " << defect;
      throw Error(Errc::not_hermitian, msg.str());
    }
    return x.frobenius_norm();
  }
  const auto vals = eig_values(x);
  if (p == 1.0) {
    double acc = 0.0;
    for (double v : vals) acc += std::abs(v);
    return acc;
  }
  double acc = 0.0;
  for (double v : vals) acc += std::pow(std::abs(v), p);
  return std::pow(acc, 1.0 / p);
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  const std::size_t m = rho.dim_a();
  const std::size_t n = rho.dim_b();
  const ComplexMatrix& src = rho.matrix();
  ComplexMatrix out(m * n, m * n);
  // swap the A-block indices: out block (i,k) = rho block (k,i)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t rb = 0; rb < n; ++rb) {
        const cplx* s = src.row(k * n + rb) + i * n;
        cplx* d = out.row(i * n + rb) + k * n;
        for (std::size_t cb = 0; cb < n; ++cb) d[cb] = s[cb];
      }
  return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const std::size_t m = rho.dim_a();
  const std::size_t n = rho.dim_b();
  const ComplexMatrix& src = rho.matrix();
  if (keep == Subsystem::a) {
    ComplexMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        cplx t{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) t += src(i * n + j, k * n + j);
        out(i, k) = t;
      }
    return out;
  }
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      cplx t{0.0, 0.0};
      for (std::size_t i = 0; i < m; ++i) t += src(i * n + j, i * n + l);
      out(j, l) = t;
    }
  return out;
}

DensityMatrix repartition(const DensityMatrix& rho, Bipartition new_dims) {
  if (new_dims.total() != rho.total_dim()) {
    std::ostringstream msg;
    msg << "cannot repartition " << rho.dim_a() << "x" << rho.dim_b() << " as "
        << new_dims.dim_a << "x" << new_dims.dim_b << ": products differ";
    throw Error(Errc::dimension_mismatch, msg.str());
  }
  return DensityMatrix::unchecked(new_dims, rho.matrix());
}

DensityMatrix dephase_a(const DensityMatrix& rho, const MeasurementBasis& basis) {
  const std::size_t m = rho.dim_a();
  const std::size_t n = rho.dim_b();
  if (basis.dim() != m) {
    std::ostringstream msg;
    msg << "measurement basis lives on dimension " << basis.dim() << ", subsystem A has "
        << m;
    throw Error(Errc::incomplete_basis, msg.str());
  }
  const ComplexMatrix& u = basis.vectors();
  const ComplexMatrix& src = rho.matrix();

  ComplexMatrix out(m * n, m * n);
  ComplexMatrix mk(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    // M_k = <b_k| rho |b_k>_A, an n x n block
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) mk(r, c) = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const cplx w = std::conj(u(i, k)) * u(j, k);
        if (w.real() == 0.0 && w.imag() == 0.0) continue;
        for (std::size_t rb = 0; rb < n; ++rb)
          kernels::axpy(w, src.row(i * n + rb) + j * n, mk.row(rb), n);
      }
    // out += |b_k><b_k| (x) M_k
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const cplx w = u(i, k) * std::conj(u(j, k));
        if (w.real() == 0.0 && w.imag() == 0.0) continue;
        for (std::size_t rb = 0; rb < n; ++rb)
          kernels::axpy(w, mk.row(rb), out.row(i * n + rb) + j * n, n);
      }
  }
  return DensityMatrix::unchecked(rho.dims(), std::move(out));
}

}  // namespace qdm
