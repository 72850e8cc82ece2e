#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cartan/cartan_matrix.hpp"
#include "cartan/classify.hpp"
#include "cartan/permutation.hpp"
#include "cartan/rational.hpp"

// Slow, independent reference implementations. Nothing here calls the
// library's classifier, canonical form or enumerator.
namespace cartan::testing {

/// Feasibility of {x >= 0 : m x = b}, decided by phase-1 simplex with
/// Bland's rule in exact rationals.
bool lp_feasible(const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& b);

/// Kac's positive-vector characterization for an indecomposable even
/// matrix: finite iff some u > 0 has Au > 0, affine iff some u > 0 has
/// Au = 0, indefinite otherwise.
Kind positive_vector_kind(const IntMatrix& a);

/// Connected components by plain depth-first search.
std::vector<IndexSet> oracle_components(const IntMatrix& a);

/// Indecomposable, indefinite, and every main submatrix has only finite or
/// affine components, all decided by positive_vector_kind.
bool oracle_almost_affine(const IntMatrix& a);

/// Some m2 with m2(s(i), s(j)) = m1(i, j) and matching parities, by trying
/// all n! permutations in lexicographic order.
std::optional<Permutation> brute_force_equivalence(const CartanMatrix& m1, const CartanMatrix& m2);

/// Lexicographic minimum over all n! relabellings of (parities, row-major
/// entries). Equal keys <=> equivalent matrices.
std::vector<std::int64_t> brute_force_key(const CartanMatrix& m);

/// All rank-3 almost affine even matrices with entries in [-max_abs, 0],
/// one per class. Every pair of a rank-3 matrix is a main submatrix, so the
/// product a_ij a_ji <= 4 makes max_abs = 4 exhaustive.
std::vector<CartanMatrix> brute_force_rank3_hyperbolic(int max_abs = 4);

}  // namespace cartan::testing
