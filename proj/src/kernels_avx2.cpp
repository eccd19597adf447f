#if QDM_HAVE_AVX2

#include <immintrin.h>

#include "kernels_detail.hpp"

// Complex doubles are stored interleaved [re, im]; a __m256d holds two of
// them. Products use the usual permute/fmaddsub split: for z = a*b,
// even lanes take ar*br - ai*bi and odd lanes ar*bi + ai*br.
namespace qdm::kernels::detail {

namespace {

inline __m256d cmul(__m256d a_re, __m256d a_im, __m256d b) {
  // (a_re + i a_im) * b with a_re/a_im lane-duplicated reals
  __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

inline __m256d cmul_conj(__m256d a_re, __m256d a_im, __m256d b) {
  // conj(a_re + i a_im) * b
  __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmsubadd_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    __m256d yv = _mm256_loadu_pd(reinterpret_cast<double*>(const_cast<cplx*>(y + i)));
    yv = _mm256_add_pd(yv, cmul(ar, ai, xv));
    _mm256_storeu_pd(reinterpret_cast<double*>(y + i), yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    __m256d yv = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
    __m256d xr = _mm256_movedup_pd(xv);
    __m256d xi = _mm256_permute_pd(xv, 0xF);
    __m256d y_sw = _mm256_permute_pd(yv, 0x5);
    // conj(x)*y: even lanes xr*yr + xi*yi, odd lanes xr*yi - xi*yr
    acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(xr, yv, _mm256_mul_pd(xi, y_sw)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  cplx result{lanes[0] + lanes[2], lanes[1] + lanes[3]};
  for (; i < n; ++i) result += std::conj(x[i]) * y[i];
  return result;
}

double sum_abs2_avx2(const cplx* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double result = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i)
    result += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return result;
}

void rotate_pair_avx2(double c, cplx s, cplx* u, cplx* v, std::size_t n) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d uv = _mm256_loadu_pd(reinterpret_cast<const double*>(u + i));
    __m256d vv = _mm256_loadu_pd(reinterpret_cast<const double*>(v + i));
    __m256d su = cmul(sr, si, uv);        // s * u
    __m256d csv = cmul_conj(sr, si, vv);  // conj(s) * v
    __m256d un = _mm256_fmadd_pd(cv, uv, csv);
    __m256d vn = _mm256_fmsub_pd(cv, vv, su);
    _mm256_storeu_pd(reinterpret_cast<double*>(u + i), un);
    _mm256_storeu_pd(reinterpret_cast<double*>(v + i), vn);
  }
  const cplx sc = std::conj(s);
  for (; i < n; ++i) {
    const cplx ui = u[i];
    const cplx vi = v[i];
    u[i] = c * ui + sc * vi;
    v[i] = c * vi - s * ui;
  }
}

}  // namespace

const Vtable avx2_vtable = {axpy_avx2, dot_conj_avx2, sum_abs2_avx2,
                            rotate_pair_avx2};

}  // namespace qdm::kernels::detail

#endif  // QDM_HAVE_AVX2
