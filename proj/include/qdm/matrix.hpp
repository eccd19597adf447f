#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qdm {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Hermiticity is not assumed here;
// operations that need it check for themselves.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

  static ComplexMatrix identity(std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  cplx* row(std::size_t r) { return data_.data() + r * cols_; }
  const cplx* row(std::size_t r) const { return data_.data() + r * cols_; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  cplx trace() const;

  double frobenius_norm() const;
  double max_abs() const;
  // max |(i,j) entry - conj((j,i) entry)|; matrix must be square
  double hermiticity_defect() const;
  // (X + X^dagger) / 2
  ComplexMatrix symmetrized() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx a);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx a, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; the row index of the result is i_a * b.rows() + i_b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace qdm
