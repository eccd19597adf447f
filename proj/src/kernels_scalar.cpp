#include "kernels_detail.hpp"

namespace qdm::kernels::detail {

namespace {

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cplx dot_conj_scalar(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double sum_abs2_scalar(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return acc;
}

void rotate_pair_scalar(double c, cplx s, cplx* u, cplx* v, std::size_t n) {
  const cplx sc = std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx ui = u[i];
    const cplx vi = v[i];
    u[i] = c * ui + sc * vi;
    v[i] = c * vi - s * ui;
  }
}

}  // namespace

const Vtable scalar_vtable = {axpy_scalar, dot_conj_scalar, sum_abs2_scalar,
                              rotate_pair_scalar};

}  // namespace qdm::kernels::detail
