#pragma once

#include <cstdint>
#include <optional>

#include "cartan/cartan_matrix.hpp"
#include "cartan/rational.hpp"

namespace cartan {

/// Bit set of matrix indices; bit i stands for index i.
using IndexMask = std::uint64_t;

inline constexpr std::size_t max_mask_rank = 63;

IndexMask full_mask(std::size_t n) noexcept;
IndexSet mask_indices(IndexMask mask);
IndexMask to_mask(const IndexSet& indices);

/// True if the support graph of `a` restricted to `mask` is connected
/// (the empty mask is not).
bool is_connected_on(const IntMatrix& a, IndexMask mask);

/// Exact determinant of the principal submatrix on `mask` (Bareiss
/// elimination; 64-bit fast path, arbitrary precision on overflow).
BigInt principal_minor(const IntMatrix& a, IndexMask mask);
BigInt determinant(const IntMatrix& a);

/// Sign (-1, 0, +1) of principal_minor without materializing a BigInt when
/// the 64-bit path suffices.
int principal_minor_sign(const IntMatrix& a, IndexMask mask);

}  // namespace cartan
