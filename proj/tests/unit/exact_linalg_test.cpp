#include <gtest/gtest.h>

#include <numeric>

#include "cartan/exact_linalg.hpp"
#include "generators.hpp"

namespace cartan {
namespace {

// Laplace expansion along the first row; exponential but exact.
BigInt laplace(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    IntMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, k = 0; j < n; ++j) {
        if (j != c) minor(i - 1, k++) = a(i, j);
      }
    }
    const BigInt term = BigInt(a(0, c)) * laplace(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

TEST(Determinant, SmallExamples) {
  EXPECT_EQ(determinant(IntMatrix::from_rows({{2, -1}, {-1, 2}})), 3);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{2, -1}, {-4, 2}})), 0);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{2, -3}, {-3, 2}})), -5);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}})), -32);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})), -1);
}

TEST(Determinant, AgreesWithLaplace) {
  testing::Rng rng(3);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  for (int k = 0; k < 400; ++k) {
    const std::size_t n = 1 + k % 7;
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    }
    ASSERT_EQ(determinant(a), laplace(a)) << k;
  }
}

TEST(Determinant, OverflowFallsBackToBigInt) {
  const std::int64_t big = std::int64_t{1} << 40;
  const IntMatrix a = IntMatrix::from_rows({{big, -big, 0}, {-big, big + 1, -big}, {0, -big, big}});
  EXPECT_EQ(determinant(a), laplace(a));
  const IntMatrix huge = IntMatrix::from_rows({{INT64_MAX, INT64_MIN + 1}, {INT64_MIN + 1, INT64_MAX}});
  EXPECT_EQ(determinant(huge), laplace(huge));
}

TEST(PrincipalMinor, MasksAndSigns) {
  const IntMatrix a = IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -3}, {0, -3, 2}});
  EXPECT_EQ(principal_minor(a, 0b011), 3);
  EXPECT_EQ(principal_minor(a, 0b110), -5);
  EXPECT_EQ(principal_minor(a, 0b101), 4);
  EXPECT_EQ(principal_minor_sign(a, 0b110), -1);
  EXPECT_EQ(principal_minor_sign(a, 0b111), laplace(a).sign());
  EXPECT_EQ(mask_indices(0b101), (IndexSet{0, 2}));
  EXPECT_EQ(to_mask({0, 2}), IndexMask{0b101});
  EXPECT_EQ(full_mask(3), IndexMask{0b111});
  EXPECT_FALSE(is_connected_on(a, 0b101));
  EXPECT_TRUE(is_connected_on(a, 0b111));
  EXPECT_FALSE(is_connected_on(a, 0));
}

}  // namespace
}  // namespace cartan
