#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Low-level complex array kernels. Every routine has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant; the active variant is
// picked once at startup (overridable with QDM_BACKEND=scalar|avx2 or
// set_backend, which the equivalence tests use to pin a lane).
namespace qdm::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

bool avx2_supported();
Backend active_backend();
void set_backend(Backend b);  // throws std::invalid_argument if unsupported
std::string_view backend_name(Backend b);

// y[i] += a * x[i]
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);

// sum_i conj(x[i]) * y[i]
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);

// sum_i |x[i]|^2
double sum_abs2(const cplx* x, std::size_t n);

// In-place plane rotation of two rows, c real:
//   u <- c*u + conj(s)*v
//   v <- c*v - s*u_old
// u and v must not overlap.
void rotate_pair(double c, cplx s, cplx* u, cplx* v, std::size_t n);

}  // namespace qdm::kernels
