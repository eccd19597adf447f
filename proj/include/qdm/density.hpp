#pragma once

#include <cstddef>

#include "qdm/matrix.hpp"

namespace qdm {

// Declared tensor split of a composite space. The same matrix may be read
// under several bipartitions; index i*dim_b + j addresses |i>_A |j>_B.
struct Bipartition {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t total() const { return dim_a * dim_b; }
  bool operator==(const Bipartition&) const = default;
};

// Hermitian, PSD, unit-trace matrix with an attached bipartition.
// Construction validates all three invariants (Hermitian within tol::herm,
// symmetrized on acceptance; trace within tol::trace; eigenvalues above
// tol::psd_floor) and throws qdm::Error naming the failed check.
class DensityMatrix {
 public:
  DensityMatrix(Bipartition dims, ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return mat_; }
  Bipartition dims() const { return dims_; }
  std::size_t dim_a() const { return dims_.dim_a; }
  std::size_t dim_b() const { return dims_.dim_b; }
  std::size_t total_dim() const { return dims_.total(); }

  // Bypasses validation; for outputs of maps that preserve the invariants
  // exactly (repartition, dephasing, tensoring with a valid state).
  static DensityMatrix unchecked(Bipartition dims, ComplexMatrix matrix);

 private:
  struct unchecked_t {};
  DensityMatrix(unchecked_t, Bipartition dims, ComplexMatrix matrix);

  Bipartition dims_;
  ComplexMatrix mat_;
};

// Complete rank-1 projective measurement on subsystem A, held as the m
// orthonormal columns of an m x m matrix.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(ComplexMatrix vectors);  // validates the Gram matrix
  static MeasurementBasis computational(std::size_t m);
  // Same validation as the main constructor; named for call-site clarity.
  static MeasurementBasis from_unitary(const ComplexMatrix& u);

  const ComplexMatrix& vectors() const { return vectors_; }
  std::size_t dim() const { return vectors_.rows(); }

  static MeasurementBasis unchecked(ComplexMatrix vectors);

 private:
  struct unchecked_t {};
  MeasurementBasis(unchecked_t, ComplexMatrix vectors);

  ComplexMatrix vectors_;
};

}  // namespace qdm
