#include "cartan/exact_linalg.hpp"

#include <array>
#include <bit>
#include <utility>

#include "cartan/error.hpp"

namespace cartan {

IndexMask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~IndexMask{0} : (IndexMask{1} << n) - 1;
}

IndexSet mask_indices(IndexMask mask) {
  IndexSet out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

IndexMask to_mask(const IndexSet& indices) {
  IndexMask m = 0;
  for (std::size_t i : indices) {
    if (i >= max_mask_rank) throw Error(ErrorCode::index_out_of_range, "index too large for a bit mask");
    m |= IndexMask{1} << i;
  }
  return m;
}

bool is_connected_on(const IntMatrix& a, IndexMask mask) {
  if (mask == 0) return false;
  IndexMask reached = mask & (~mask + 1);
  IndexMask frontier = reached;
  while (frontier != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    IndexMask rest = mask & ~reached;
    while (rest != 0) {
      const auto j = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      if (a(i, j) != 0) {
        reached |= IndexMask{1} << j;
        frontier |= IndexMask{1} << j;
      }
    }
  }
  return reached == mask;
}

namespace {

__extension__ typedef __int128 Wide;

template <typename T>
T bareiss(std::vector<T>& m, std::size_t n) {
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r * n + k] == 0) ++r;
      if (r == n) return T(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[r * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
    }
    prev = m[k * n + k];
  }
  T det = m[(n - 1) * n + (n - 1)];
  return sign < 0 ? T(-det) : det;
}

// 64-bit Bareiss; every intermediate is a minor of the input. Values that
// leave the safe range are reported as nullopt.
std::optional<std::int64_t> bareiss_i64(std::vector<std::int64_t>& m, std::size_t n) {
  if (n == 0) return 1;
  // Keeping every value within 2^62 bounds each product by 2^124, so the
  // 128-bit difference below cannot overflow.
  constexpr std::int64_t hi = std::int64_t{1} << 62;
  constexpr std::int64_t lo = -hi;
  for (std::int64_t v : m)
    if (v < lo || v > hi) return std::nullopt;
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[r * n + c]);
      sign = -sign;
    }
    const Wide pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Wide lead = m[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        const Wide v = (static_cast<Wide>(m[i * n + j]) * pivot - lead * m[k * n + j]) / prev;
        if (v < lo || v > hi) return std::nullopt;
        m[i * n + j] = static_cast<std::int64_t>(v);
      }
    }
    prev = m[k * n + k];
  }
  const std::int64_t det = m[(n - 1) * n + (n - 1)];
  return sign < 0 ? -det : det;
}

std::vector<std::int64_t> gather(const IntMatrix& a, IndexMask mask, std::size_t& n) {
  std::array<std::size_t, 64> idx{};
  n = 0;
  for (IndexMask m = mask; m != 0; m &= m - 1) idx[n++] = static_cast<std::size_t>(std::countr_zero(m));
  std::vector<std::int64_t> flat(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = a(idx[r], idx[c]);
  return flat;
}

}  // namespace

BigInt principal_minor(const IntMatrix& a, IndexMask mask) {
  std::size_t n = 0;
  auto flat = gather(a, mask, n);
  auto work = flat;
  if (auto fast = bareiss_i64(work, n)) return BigInt(*fast);
  std::vector<BigInt> big(flat.begin(), flat.end());
  return bareiss(big, n);
}

BigInt determinant(const IntMatrix& a) {
  if (a.size() > max_mask_rank) {
    std::vector<BigInt> big(a.flat().begin(), a.flat().end());
    return bareiss(big, a.size());
  }
  return principal_minor(a, full_mask(a.size()));
}

int principal_minor_sign(const IntMatrix& a, IndexMask mask) {
  std::size_t n = 0;
  auto flat = gather(a, mask, n);
  auto work = flat;
  if (auto fast = bareiss_i64(work, n)) return (*fast > 0) - (*fast < 0);
  std::vector<BigInt> big(flat.begin(), flat.end());
  return bareiss(big, n).sign();
}

}  // namespace cartan
