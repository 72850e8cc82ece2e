#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cartan {

/// Dense row-major square matrix. Used for integer Cartan data, exact
/// rational Gram data and floating embeddings alike.
template <typename T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < n_ && j < n_);
    return data_[i * n_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < n_ && j < n_);
    return data_[i * n_ + j];
  }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const T> flat() const { return data_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  SquareMatrix transposed() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    SquareMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& r : rows) {
      assert(r.size() == rows.size());
      std::copy(r.begin(), r.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.n_));
      ++i;
    }
    return m;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace cartan
