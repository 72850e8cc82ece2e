#include "cartan/geometry.hpp"

#include <cmath>

#include "cartan/error.hpp"
#include "cartan/supermap.hpp"

namespace cartan {
namespace {

struct Congruence {
  RationalMatrix p;  // p * b * p^T = diag(d)
  std::vector<Rational> d;
};

void add_row_col(RationalMatrix& w, RationalMatrix& p, std::size_t target, std::size_t source, const Rational& f) {
  const std::size_t n = w.size();
  for (std::size_t c = 0; c < n; ++c) w(target, c) += f * w(source, c);
  for (std::size_t r = 0; r < n; ++r) w(r, target) += f * w(r, source);
  for (std::size_t c = 0; c < n; ++c) p(target, c) += f * p(source, c);
}

void swap_row_col(RationalMatrix& w, RationalMatrix& p, std::size_t a, std::size_t b) {
  if (a == b) return;
  const std::size_t n = w.size();
  for (std::size_t c = 0; c < n; ++c) std::swap(w(a, c), w(b, c));
  for (std::size_t r = 0; r < n; ++r) std::swap(w(r, a), w(r, b));
  for (std::size_t c = 0; c < n; ++c) std::swap(p(a, c), p(b, c));
}

// Symmetric Gaussian elimination by simultaneous row/column operations.
// A zero pivot with a nonzero off-diagonal entry w_ij is repaired by adding
// index j to index i, which makes w_ii = 2 w_ij != 0.
Congruence congruence_diagonalize(const RationalMatrix& b) {
  const std::size_t n = b.size();
  RationalMatrix w = b;
  RationalMatrix p(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) p(i, i) = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && w(piv, piv) == 0) ++piv;
    if (piv == n) {
      bool repaired = false;
      for (std::size_t i = k; i < n && !repaired; ++i) {
        for (std::size_t j = i + 1; j < n && !repaired; ++j) {
          if (w(i, j) != 0) {
            add_row_col(w, p, i, j, Rational(1));
            piv = i;
            repaired = true;
          }
        }
      }
      if (!repaired) break;  // trailing block is zero
    }
    swap_row_col(w, p, k, piv);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (w(r, k) == 0) continue;
      add_row_col(w, p, r, k, -w(r, k) / w(k, k));
    }
  }
  std::vector<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = w(i, i);
  return Congruence{std::move(p), std::move(d)};
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw std::logic_error("congruence matrix is singular");
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a(c, k), a(piv, k));
      std::swap(inv(c, k), inv(piv, k));
    }
    const Rational scale = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= scale;
      inv(c, k) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

Inertia count_signs(const std::vector<Rational>& d) {
  Inertia in;
  for (const Rational& x : d) {
    if (x > 0) ++in.positive;
    else if (x < 0) ++in.negative;
    else ++in.zero;
  }
  return in;
}

void require_symmetrizable(const CartanMatrix& m, const char* role) {
  if (!is_symmetrizable(m)) throw Error(ErrorCode::not_symmetrizable, std::string(role) + " is not symmetrizable");
}

}  // namespace

RationalMatrix cos2_matrix(const CartanMatrix& m) {
  if (m.has_isotropic()) throw Error(ErrorCode::isotropic_unsupported, "wall angles need a nonzero diagonal");
  const std::size_t n = m.rank();
  RationalMatrix c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m(i, j) == 0) continue;
      const int s = m(i, j) > 0 ? 1 : -1;
      c(i, j) = make_rational(s * m(i, j) * m(j, i), m(i, i) * m(j, j));
    }
  }
  return c;
}

RationalMatrix cos2_from_gram(const RationalMatrix& b) {
  const std::size_t n = b.size();
  RationalMatrix c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || b(i, j) == 0) continue;
      c(i, j) = Rational(b(i, j).sign()) * b(i, j) * b(i, j) / (b(i, i) * b(j, j));
    }
  }
  return c;
}

Inertia inertia(const RationalMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw Error(ErrorCode::validation_error, "inertia needs a symmetric matrix");
  return count_signs(congruence_diagonalize(symmetric).d);
}

GramData gram_data(const CartanMatrix& m) {
  auto d = symmetrizer(m);
  if (!d) throw Error(ErrorCode::not_symmetrizable, "matrix is not symmetrizable");
  RationalMatrix b = *symmetrize(m);
  Inertia sig = inertia(b);
  return GramData{std::move(*d), std::move(b), cos2_matrix(m), sig};
}

bool billiard_compare(const CartanMatrix& s, const CartanMatrix& h, const Permutation& sigma) {
  require_symmetrizable(s, "super matrix");
  require_symmetrizable(h, "even matrix");
  if (!verify_pair(s, h, sigma)) {
    throw Error(ErrorCode::pair_mismatch, "even matrix is not the permuted desuperization of the super matrix");
  }
  const RationalMatrix cs = cos2_matrix(s);
  const RationalMatrix ch = cos2_matrix(h);
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j)
      if (ch(sigma(i), sigma(j)) != cs(i, j)) return false;
  return inertia(*symmetrize(s)) == inertia(*symmetrize(h));
}

SquareMatrix<double> minkowski_gram(const std::vector<std::vector<double>>& vectors) {
  const std::size_t n = vectors.size();
  SquareMatrix<double> g(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = vectors[i];
      const auto& y = vectors[j];
      double acc = 0.0;
      for (std::size_t k = 0; k + 1 < x.size(); ++k) acc += x[k] * y[k];
      if (!x.empty()) acc -= x.back() * y.back();
      g(i, j) = acc;
    }
  }
  return g;
}

WallEmbedding lorentz_embedding(const RationalMatrix& b, double tolerance) {
  if (!b.is_symmetric()) throw Error(ErrorCode::not_lorentzian, "Gram matrix is not symmetric");
  const std::size_t n = b.size();
  Congruence c = congruence_diagonalize(b);
  const Inertia in = count_signs(c.d);
  if (!in.is_lorentzian()) {
    throw Error(ErrorCode::not_lorentzian, "signature is (" + std::to_string(in.positive) + "," +
                                               std::to_string(in.negative) + "," + std::to_string(in.zero) +
                                               "), need (n-1,1,0)");
  }
  // b = q diag(d) q^T with q = p^{-1}; spacelike coordinates first.
  const RationalMatrix q = inverse(c.p);
  std::vector<std::size_t> order;
  std::size_t timelike = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (c.d[k] > 0) order.push_back(k);
    else timelike = k;
  }
  order.push_back(timelike);
  std::vector<double> scale(n);
  for (std::size_t k = 0; k < n; ++k) scale[k] = std::sqrt(std::abs(c.d[k].convert_to<double>()));

  WallEmbedding emb;
  emb.tolerance = tolerance;
  emb.vectors.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c_idx = 0; c_idx < n; ++c_idx)
      emb.vectors[i][c_idx] = q(i, order[c_idx]).convert_to<double>() * scale[order[c_idx]];

  const SquareMatrix<double> g = minkowski_gram(emb.vectors);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      emb.max_gram_error = std::max(emb.max_gram_error, std::abs(g(i, j) - b(i, j).convert_to<double>()));
  if (!(emb.max_gram_error <= tolerance)) {
    throw Error(ErrorCode::tolerance_exceeded,
                "embedding reproduces the Gram matrix only to " + std::to_string(emb.max_gram_error));
  }
  return emb;
}

}  // namespace cartan
