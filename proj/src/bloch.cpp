#include "qdm/bloch.hpp"

#include <cmath>
#include <sstream>

#include "qdm/eig.hpp"
#include "qdm/error.hpp"
#include "qdm/tolerances.hpp"

namespace qdm {

namespace {

constexpr cplx kI{0.0, 1.0};

struct GmSpec {
  enum Kind { sym, antisym, diag } kind;
  std::size_t a = 0, b = 0;  // pair indices (sym/antisym) or level b=l (diag)
};

GmSpec gm_spec(std::size_t n, std::size_t index) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (index >= n * n - 1) {
    std::ostringstream msg;
    msg << "Gell-Mann index " << index << " out of range for dimension " << n;
    throw Error(Errc::invalid_dim, msg.str());
  }
  if (index < 2 * pairs) {
    std::size_t k = index % pairs;
    // k-th pair (a, b), a < b, lexicographic
    std::size_t a = 0;
    std::size_t remaining = k;
    while (remaining >= n - 1 - a) {
      remaining -= n - 1 - a;
      ++a;
    }
    const std::size_t b = a + 1 + remaining;
    return {index < pairs ? GmSpec::sym : GmSpec::antisym, a, b};
  }
  return {GmSpec::diag, 0, index - 2 * pairs + 1};
}

// tr(M * beta) for the sparse canonical basis elements
cplx gm_block_trace(const ComplexMatrix& mat, std::size_t row0, std::size_t col0,
                    std::size_t n, const GmSpec& spec) {
  auto at = [&](std::size_t r, std::size_t c) { return mat(row0 + r, col0 + c); };
  switch (spec.kind) {
    case GmSpec::sym:
      return at(spec.a, spec.b) + at(spec.b, spec.a);
    case GmSpec::antisym:
      return kI * (at(spec.a, spec.b) - at(spec.b, spec.a));
    case GmSpec::diag: {
      const std::size_t l = spec.b;
      const double f = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
      cplx acc{0.0, 0.0};
      for (std::size_t j = 0; j < l; ++j) acc += at(j, j);
      acc -= static_cast<double>(l) * at(l, l);
      return f * acc;
    }
  }
  return {0.0, 0.0};
}

}  // namespace

ComplexMatrix pauli(std::size_t i) {
  ComplexMatrix s(2, 2);
  switch (i) {
    case 0:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 1:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      break;
    case 2:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw Error(Errc::invalid_dim, "Pauli index must be 0, 1 or 2");
  }
  return s;
}

ComplexMatrix gell_mann(std::size_t n, std::size_t index) {
  const GmSpec spec = gm_spec(n, index);
  ComplexMatrix b(n, n);
  switch (spec.kind) {
    case GmSpec::sym:
      b(spec.a, spec.b) = 1.0;
      b(spec.b, spec.a) = 1.0;
      break;
    case GmSpec::antisym:
      b(spec.a, spec.b) = -kI;
      b(spec.b, spec.a) = kI;
      break;
    case GmSpec::diag: {
      const std::size_t l = spec.b;
      const double f = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
      for (std::size_t j = 0; j < l; ++j) b(j, j) = f;
      b(l, l) = -f * static_cast<double>(l);
      break;
    }
  }
  return b;
}

BlochForm decompose_2xn(const DensityMatrix& rho) {
  if (rho.dim_a() != 2)
    throw Error(Errc::not_qubit_a, "Bloch decomposition needs a qubit on subsystem A");
  const std::size_t n = rho.dim_b();
  const std::size_t nb = n * n - 1;
  const ComplexMatrix& mat = rho.matrix();

  BlochForm form;
  form.dim_b = n;
  form.y.assign(nb, 0.0);
  form.t.assign(3 * nb, 0.0);

  // block traces t_ik = tr_B block(i,k); x_i = sum_ik sigma_i[k,i] t_ik
  cplx bt[2][2];
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      cplx acc{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) acc += mat(i * n + j, k * n + j);
      bt[i][k] = acc;
    }
  form.x[0] = (bt[0][1] + bt[1][0]).real();
  form.x[1] = (kI * (bt[0][1] - bt[1][0])).real();
  form.x[2] = (bt[0][0] - bt[1][1]).real();

  for (std::size_t j = 0; j < nb; ++j) {
    const GmSpec spec = gm_spec(n, j);
    const cplx d00 = gm_block_trace(mat, 0, 0, n, spec);
    const cplx d01 = gm_block_trace(mat, 0, n, n, spec);
    const cplx d10 = gm_block_trace(mat, n, 0, n, spec);
    const cplx d11 = gm_block_trace(mat, n, n, n, spec);
    form.y[j] = (d00 + d11).real();
    // sigma contractions over the A block index, same pattern as x
    form.t[0 * nb + j] = (d01 + d10).real();
    form.t[1 * nb + j] = (kI * (d01 - d10)).real();
    form.t[2 * nb + j] = (d00 - d11).real();
  }
  return form;
}

ComplexMatrix reconstruct_2xn(const BlochForm& form) {
  const std::size_t n = form.dim_b;
  const std::size_t nb = n * n - 1;
  ComplexMatrix out = ComplexMatrix::identity(2 * n);
  out *= cplx{1.0 / (2.0 * n), 0.0};

  const ComplexMatrix eye_n = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < 3; ++i) {
    ComplexMatrix term = tensor(pauli(i), eye_n);
    term *= cplx{form.x[i] / (2.0 * n), 0.0};
    out += term;
  }
  const ComplexMatrix eye_2 = ComplexMatrix::identity(2);
  for (std::size_t j = 0; j < nb; ++j) {
    const ComplexMatrix beta = gell_mann(n, j);
    if (form.y[j] != 0.0) {
      ComplexMatrix term = tensor(eye_2, beta);
      term *= cplx{form.y[j] / 4.0, 0.0};
      out += term;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const double tij = form.t[i * nb + j];
      if (tij == 0.0) continue;
      ComplexMatrix term = tensor(pauli(i), beta);
      term *= cplx{tij / 4.0, 0.0};
      out += term;
    }
  }
  return out;
}

double gd2_closed_form(const DensityMatrix& rho) {
  const BlochForm form = decompose_2xn(rho);
  const std::size_t n = form.dim_b;
  const std::size_t nb = n * n - 1;

  // G = x x^T / (2n) + T T^T / 4, real symmetric 3x3
  ComplexMatrix g(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      double acc = form.x[i] * form.x[k] / (2.0 * n);
      double tt = 0.0;
      for (std::size_t j = 0; j < nb; ++j) tt += form.t[i * nb + j] * form.t[k * nb + j];
      g(i, k) = acc + tt / 4.0;
    }
  const auto vals = eig_values(g);
  const double value = vals[1] + vals[2];  // tr(G) - lambda_max(G)
  return value < 0.0 ? 0.0 : value;
}

}  // namespace qdm
