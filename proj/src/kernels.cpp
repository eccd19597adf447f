#include "qdm/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace qdm::kernels {

namespace {

const detail::Vtable* g_active = nullptr;
Backend g_backend = Backend::scalar;

const detail::Vtable* table_for(Backend b) {
#if QDM_HAVE_AVX2
  if (b == Backend::avx2) return &detail::avx2_vtable;
#endif
  (void)b;
  return &detail::scalar_vtable;
}

void init_if_needed() {
  if (g_active) return;
  Backend pick = avx2_supported() ? Backend::avx2 : Backend::scalar;
  if (const char* env = std::getenv("QDM_BACKEND")) {
    if (std::strcmp(env, "scalar") == 0) pick = Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) pick = Backend::avx2;
  }
  g_backend = pick;
  g_active = table_for(pick);
}

}  // namespace

bool avx2_supported() {
#if QDM_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  init_if_needed();
  return g_backend;
}

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported())
    throw std::invalid_argument("avx2 backend not supported on this machine");
  g_backend = b;
  g_active = table_for(b);
}

std::string_view backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  init_if_needed();
  g_active->axpy(a, x, y, n);
}

cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  init_if_needed();
  return g_active->dot_conj(x, y, n);
}

double sum_abs2(const cplx* x, std::size_t n) {
  init_if_needed();
  return g_active->sum_abs2(x, n);
}

void rotate_pair(double c, cplx s, cplx* u, cplx* v, std::size_t n) {
  init_if_needed();
  g_active->rotate_pair(c, s, u, v, n);
}

}  // namespace qdm::kernels
