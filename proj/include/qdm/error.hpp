#pragma once

#include <stdexcept>
#include <string>

namespace qdm {

enum class Errc {
  non_square,
  not_hermitian,
  invalid_order,
  dimension_mismatch,
  incomplete_basis,
  invalid_z,
  invalid_dim,
  bad_probabilities,
  block_dimension_mismatch,
  bad_rank,
  not_npt,
  not_qubit_a,
  not_positive,
  bad_trace,
  bad_state_file,
  numerical_failure,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace qdm
