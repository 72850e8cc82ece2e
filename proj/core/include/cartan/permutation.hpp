#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cartan/cartan_matrix.hpp"

namespace cartan {

/// Bijection on {0..n-1}; image[i] is where old index i is sent. Externally
/// written 1-based, e.g. [2,3,1].
class Permutation {
 public:
  static Permutation identity(std::size_t n);
  /// Throws invalid_permutation unless `image` is a bijection.
  static Permutation from_zero_based(std::vector<std::size_t> image);
  static Permutation from_one_based(const std::vector<std::int64_t>& image);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  std::vector<std::int64_t> one_based() const;

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// x -> next(this(x)).
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {}
  std::vector<std::size_t> image_;
};

/// The matrix R with R(sigma(i), sigma(j)) = a(i, j).
IntMatrix permute(const IntMatrix& a, const Permutation& sigma);
CartanMatrix permute(const CartanMatrix& m, const Permutation& sigma);

}  // namespace cartan
