#include "qdm/density.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qdm/eig.hpp"
#include "qdm/error.hpp"
#include "qdm/tolerances.hpp"

namespace qdm {

DensityMatrix::DensityMatrix(Bipartition dims, ComplexMatrix matrix)
    : dims_(dims), mat_(std::move(matrix)) {
  if (dims_.dim_a == 0 || dims_.dim_b == 0)
    throw Error(Errc::invalid_dim, "bipartition dimensions must be positive");
  if (!mat_.square() || mat_.rows() != dims_.total()) {
    std::ostringstream msg;
    msg << "matrix is " << mat_.rows() << "x" << mat_.cols() << " but bipartition "
        << dims_.dim_a << "x" << dims_.dim_b << " needs " << dims_.total() << "x"
        << dims_.total();
    throw Error(Errc::dimension_mismatch, msg.str());
  }

  const double defect = mat_.hermiticity_defect();
  if (defect >= tol::herm) {
    std::ostringstream msg;
    msg << "state is not Hermitian: max asymmetry " << defect;
    throw Error(Errc::not_hermitian, msg.str());
  }
  mat_ = mat_.symmetrized();

  const double tr_err = std::abs(mat_.trace() - cplx{1.0, 0.0});
  if (tr_err > tol::trace) {
    std::ostringstream msg;
    msg << "state trace deviates from 1 by " << tr_err;
    throw Error(Errc::bad_trace, msg.str());
  }

  const auto vals = eig_values(mat_);
  const double min_eig = vals.empty() ? 0.0 : vals.back();
  if (min_eig < tol::psd_floor) {
    std::ostringstream msg;
    msg << "state is not positive semidefinite: min eigenvalue " << min_eig;
    throw Error(Errc::not_positive, msg.str());
  }
}

DensityMatrix::DensityMatrix(unchecked_t, Bipartition dims, ComplexMatrix matrix)
    : dims_(dims), mat_(std::move(matrix)) {}

DensityMatrix DensityMatrix::unchecked(Bipartition dims, ComplexMatrix matrix) {
  return DensityMatrix(unchecked_t{}, dims, std::move(matrix));
}

MeasurementBasis::MeasurementBasis(ComplexMatrix vectors) : vectors_(std::move(vectors)) {
  if (!vectors_.square() || vectors_.rows() == 0)
    throw Error(Errc::incomplete_basis,
                "measurement basis needs m orthonormal vectors of length m");
  const std::size_t m = vectors_.rows();
  // Gram = V^dagger V; for square V this also forces the projectors to sum to I
  double defect = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      cplx g{0.0, 0.0};
      for (std::size_t r = 0; r < m; ++r) g += std::conj(vectors_(r, i)) * vectors_(r, j);
      defect = std::max(defect, std::abs(g - (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
    }
  if (defect > tol::basis) {
    std::ostringstream msg;
    msg << "measurement basis is not orthonormal/complete: Gram defect " << defect;
    throw Error(Errc::incomplete_basis, msg.str());
  }
}

MeasurementBasis::MeasurementBasis(unchecked_t, ComplexMatrix vectors)
    : vectors_(std::move(vectors)) {}

MeasurementBasis MeasurementBasis::computational(std::size_t m) {
  return MeasurementBasis(unchecked_t{}, ComplexMatrix::identity(m));
}

MeasurementBasis MeasurementBasis::from_unitary(const ComplexMatrix& u) {
  return MeasurementBasis(u);
}

MeasurementBasis MeasurementBasis::unchecked(ComplexMatrix vectors) {
  return MeasurementBasis(unchecked_t{}, std::move(vectors));
}

}  // namespace qdm
