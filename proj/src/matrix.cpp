#include "qdm/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qdm/error.hpp"
#include "qdm/kernels.hpp"

namespace qdm {

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::sum_abs2(data_.data(), data_.size()));
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  if (!square()) throw Error(Errc::non_square, "hermiticity defect of a non-square matrix");
  double defect = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      defect = std::max(defect, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return defect;
}

ComplexMatrix ComplexMatrix::symmetrized() const {
  if (!square()) throw Error(Errc::non_square, "symmetrizing a non-square matrix");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(Errc::dimension_mismatch, "matrix addition shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(Errc::dimension_mismatch, "matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx a) {
  for (cplx& v : data_) v *= a;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx a, ComplexMatrix m) { return m *= a; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx* crow = c.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const cplx alv = a(i, l);
      if (alv.real() == 0.0 && alv.imag() == 0.0) continue;
      kernels::axpy(alv, b.row(l), crow, b.cols());
    }
  }
  return c;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const cplx av = a(ra, ca);
      if (av.real() == 0.0 && av.imag() == 0.0) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb) {
        cplx* dst = out.row(ra * b.rows() + rb) + ca * b.cols();
        const cplx* src = b.row(rb);
        for (std::size_t cb = 0; cb < b.cols(); ++cb) dst[cb] = av * src[cb];
      }
    }
  return out;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (std::abs(a(r, c) - b(r, c)) > tol) return false;
  return true;
}

}  // namespace qdm
