#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cartan {

enum class ErrorCode {
  non_square,
  diagonal_out_of_range,
  positive_off_diagonal,
  zero_pattern_asymmetric,
  parity_mismatch,
  rank_too_small,
  empty_set,
  index_out_of_range,
  not_even,
  decomposable,
  isotropic_unsupported,
  no_odd_index,
  size_mismatch,
  not_almost_affine,
  not_symmetrizable,
  not_lorentzian,
  pair_mismatch,
  unsupported_rank,
  invalid_permutation,
  parse_error,
  validation_error,
  io_error,
  tolerance_exceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cartan
