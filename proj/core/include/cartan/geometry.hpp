#pragma once

#include <cstddef>
#include <vector>

#include "cartan/cartan_matrix.hpp"
#include "cartan/permutation.hpp"
#include "cartan/rational.hpp"

namespace cartan {

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  bool is_lorentzian() const noexcept { return negative == 1 && zero == 0; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Billiard-wall data of a symmetrizable matrix.
struct GramData {
  Symmetrizer d;
  RationalMatrix b;     // diag(d) * A
  RationalMatrix cos2;  // signed squared cosines between walls
  Inertia signature;
};

/// cos2(i,j) = sign(a_ij) a_ij a_ji / (a_ii a_jj) off the diagonal, 1 on it.
/// Needs no symmetrizer. Throws isotropic_unsupported on a zero diagonal.
RationalMatrix cos2_matrix(const CartanMatrix& m);

/// Same quantity from a symmetric Gram matrix: sign(b_ij) b_ij^2 / (b_ii b_jj).
RationalMatrix cos2_from_gram(const RationalMatrix& b);

/// Sylvester inertia by exact congruence diagonalization.
Inertia inertia(const RationalMatrix& symmetric);

/// Throws not_symmetrizable.
GramData gram_data(const CartanMatrix& m);

/// Walls of s and h coincide: cos2_h(sigma(i), sigma(j)) = cos2_s(i, j) and
/// the signatures agree. Throws pair_mismatch when (s, h, sigma) is not a
/// desuperization pair and not_symmetrizable.
bool billiard_compare(const CartanMatrix& s, const CartanMatrix& h, const Permutation& sigma);

inline constexpr double default_embedding_tolerance = 1e-12;

/// Simple roots as vectors of R^{n-1,1}; the last coordinate is timelike.
struct WallEmbedding {
  std::vector<std::vector<double>> vectors;
  double tolerance = default_embedding_tolerance;
  double max_gram_error = 0.0;
};

/// Minkowski Gram matrix, metric diag(+, ..., +, -).
SquareMatrix<double> minkowski_gram(const std::vector<std::vector<double>>& vectors);

/// Realizes b as a Minkowski Gram matrix. The factorization is exact; only
/// the final square roots are floating point. Throws not_lorentzian, and
/// tolerance_exceeded if the reconstruction misses b by more than
/// `tolerance` in some entry.
WallEmbedding lorentz_embedding(const RationalMatrix& b, double tolerance = default_embedding_tolerance);

}  // namespace cartan
