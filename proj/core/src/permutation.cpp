#include "cartan/permutation.hpp"

#include <numeric>

#include "cartan/error.hpp"

namespace cartan {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

Permutation Permutation::from_zero_based(std::vector<std::size_t> image) {
  std::vector<bool> hit(image.size(), false);
  for (std::size_t v : image) {
    if (v >= image.size() || hit[v]) {
      throw Error(ErrorCode::invalid_permutation,
                  "not a bijection on 1.." + std::to_string(image.size()));
    }
    hit[v] = true;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(const std::vector<std::int64_t>& image) {
  std::vector<std::size_t> zero(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 1 || static_cast<std::size_t>(image[i]) > image.size()) {
      throw Error(ErrorCode::invalid_permutation,
                  "entry " + std::to_string(image[i]) + " outside 1.." + std::to_string(image.size()));
    }
    zero[i] = static_cast<std::size_t>(image[i] - 1);
  }
  return from_zero_based(std::move(zero));
}

std::vector<std::int64_t> Permutation::one_based() const {
  std::vector<std::int64_t> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = static_cast<std::int64_t>(image_[i]) + 1;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error(ErrorCode::size_mismatch, "composing permutations of different sizes");
  std::vector<std::size_t> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = next.image_[image_[i]];
  return Permutation(std::move(out));
}

IntMatrix permute(const IntMatrix& a, const Permutation& sigma) {
  if (sigma.size() != a.size()) throw Error(ErrorCode::size_mismatch, "permutation size differs from matrix rank");
  IntMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(sigma(i), sigma(j)) = a(i, j);
  return r;
}

CartanMatrix permute(const CartanMatrix& m, const Permutation& sigma) {
  std::vector<Parity> par(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) par[sigma(i)] = m.parity(i);
  return CartanMatrix::unchecked(permute(m.entries(), sigma), std::move(par));
}

}  // namespace cartan
