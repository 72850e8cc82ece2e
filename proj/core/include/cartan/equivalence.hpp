#pragma once

#include <optional>

#include "cartan/cartan_matrix.hpp"
#include "cartan/permutation.hpp"

namespace cartan {

/// C(sigma(i), sigma(j)) = M(i, j) and parity_C(sigma(i)) = parity_M(i).
struct CanonicalForm {
  CartanMatrix matrix;
  Permutation sigma;
};

/// Canonical representative under parity-preserving simultaneous row/column
/// permutations.
///
/// Each connected component is relabelled to the lexicographic minimum of
/// its "growing block" key: position k contributes
///   C(k,0), C(0,k), C(k,1), C(1,k), ..., C(k,k-1), C(k-1,k), parity(k)
/// so a candidate's comparison only depends on already placed positions and
/// the search can keep just the minimal prefixes. Components are then laid
/// out in order of decreasing size, ties broken by their canonical keys.
CanonicalForm canonical_form(const CartanMatrix& m);

/// A witness sigma with m2(sigma(i), sigma(j)) = m1(i, j) and matching
/// parities, or nullopt when the matrices are inequivalent.
std::optional<Permutation> are_equivalent(const CartanMatrix& m1, const CartanMatrix& m2);

/// Direct substitution check of a witness.
bool is_equivalence_witness(const CartanMatrix& m1, const CartanMatrix& m2, const Permutation& sigma);

}  // namespace cartan
