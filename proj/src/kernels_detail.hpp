#pragma once

#include "qdm/kernels.hpp"

namespace qdm::kernels::detail {

struct Vtable {
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  cplx (*dot_conj)(const cplx*, const cplx*, std::size_t);
  double (*sum_abs2)(const cplx*, std::size_t);
  void (*rotate_pair)(double, cplx, cplx*, cplx*, std::size_t);
};

extern const Vtable scalar_vtable;
#if QDM_HAVE_AVX2
extern const Vtable avx2_vtable;
#endif

}  // namespace qdm::kernels::detail
