#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cartan/cartan_matrix.hpp"
#include "cartan/permutation.hpp"

namespace cartan {

/// Doubles every row whose diagonal entry is 1. Throws no_odd_index when
/// there is none and isotropic_unsupported for a diagonal 0.
CartanMatrix desuperize(const CartanMatrix& s);

/// h(sigma(i), sigma(j)) == desuperize(s)(i, j) for all i, j. A missing
/// sigma means the identity. Throws size_mismatch and the desuperize errors.
bool verify_pair(const CartanMatrix& s, const CartanMatrix& h, const std::optional<Permutation>& sigma);

struct SuperizationReport {
  CartanMatrix h;
  /// Pairwise inequivalent canonical forms, sorted.
  std::vector<CartanMatrix> superizations;

  std::size_t multiplicity() const noexcept { return superizations.size(); }
};

struct SuperizeOptions {
  /// When false, `h` need not be almost affine and every halving that gives
  /// a valid matrix is reported (exploratory mode).
  bool require_almost_affine = true;
};

/// All classes of super matrices with non-isotropic odd roots whose
/// desuperization is equivalent to `h`: halve any nonempty set of rows made
/// of even integers and mark them odd. Throws not_even, not_almost_affine.
SuperizationReport find_superizations(const CartanMatrix& h, SuperizeOptions options = {});

}  // namespace cartan
