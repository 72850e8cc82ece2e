#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartan/rational.hpp"
#include "cartan/square_matrix.hpp"

namespace cartan {

/// Parity of a simple root. In a normalized matrix it fixes the diagonal:
/// even <-> 2, odd non-isotropic <-> 1, odd isotropic <-> 0.
enum class Parity : std::uint8_t { even = 0, odd_non_isotropic = 1, odd_isotropic = 2 };

std::int64_t diagonal_for(Parity p) noexcept;
char parity_code(Parity p) noexcept;  // 'e', 'o', 'i'
Parity parity_from_code(char c);      // throws Error(parse_error)
std::optional<Parity> parity_from_diagonal(std::int64_t d) noexcept;

using IntMatrix = SquareMatrix<std::int64_t>;

/// Sorted, 0-based index set.
using IndexSet = std::vector<std::size_t>;

/// A normalized (super) Cartan matrix: diagonal in {2,1,0} as dictated by the
/// per-index parity, non-positive off-diagonal entries and a symmetric zero
/// pattern. Instances are immutable; every public constructor validates.
class CartanMatrix {
 public:
  /// Throws Error with non_square, diagonal_out_of_range, positive_off_diagonal,
  /// zero_pattern_asymmetric or parity_mismatch.
  static CartanMatrix validate(const std::vector<std::vector<std::int64_t>>& rows,
                               std::optional<std::vector<Parity>> parity = std::nullopt);
  static CartanMatrix validate(IntMatrix entries, std::optional<std::vector<Parity>> parity = std::nullopt);

  /// Skips validation. Only for callers that derive the matrix from an
  /// already valid one by an invariant-preserving transformation.
  static CartanMatrix unchecked(IntMatrix entries, std::vector<Parity> parity);

  std::size_t rank() const noexcept { return entries_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  Parity parity(std::size_t i) const { return parity_[i]; }
  const std::vector<Parity>& parities() const noexcept { return parity_; }
  std::string parity_string() const;

  bool is_even() const noexcept;
  bool has_odd_non_isotropic() const noexcept;
  bool has_isotropic() const noexcept;

  std::vector<std::vector<std::int64_t>> rows() const;

  /// Total order: rank, then parity sequence, then row-major entries.
  friend std::strong_ordering operator<=>(const CartanMatrix& a, const CartanMatrix& b);
  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.parity_ == b.parity_ && a.entries_ == b.entries_;
  }

 private:
  CartanMatrix(IntMatrix entries, std::vector<Parity> parity)
      : entries_(std::move(entries)), parity_(std::move(parity)) {}

  IntMatrix entries_;
  std::vector<Parity> parity_;
};

/// Connected components of the graph with an edge {i,j} whenever a_ij != 0,
/// each sorted, listed by smallest member.
std::vector<IndexSet> components(const IntMatrix& a);
std::vector<IndexSet> components(const CartanMatrix& m);
bool is_indecomposable(const CartanMatrix& m);

/// Strike row and column i (0-based). Throws rank_too_small for rank 1 and
/// index_out_of_range for a bad index.
CartanMatrix main_submatrix(const CartanMatrix& m, std::size_t i);

/// Order-preserving restriction to `indices`. Throws empty_set.
CartanMatrix principal_submatrix(const CartanMatrix& m, const IndexSet& indices);

struct Symmetrizer {
  /// d[i] > 0 with d[i] a_ij = d[j] a_ji; the smallest index of each
  /// component carries d = 1.
  std::vector<Rational> d;
};

std::optional<Symmetrizer> symmetrizer(const IntMatrix& a);
std::optional<Symmetrizer> symmetrizer(const CartanMatrix& m);
bool is_symmetrizable(const CartanMatrix& m);

/// diag(d) * A, symmetric, when a symmetrizer exists.
std::optional<RationalMatrix> symmetrize(const CartanMatrix& m);

}  // namespace cartan
