#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cartan::testing {

bool lp_feasible(const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& b) {
  const std::size_t rows = m.size();
  if (rows == 0) return true;
  const std::size_t cols = m.front().size();
  const std::size_t width = cols + rows;  // originals, then one artificial per row
  const std::size_t rhs = width;

  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-m[i][j]) : m[i][j];
    t[i][cols + i] = 1;
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    basis[i] = cols + i;
  }
  // Reduced costs of "minimize the sum of artificials".
  std::vector<Rational> obj(width + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= t[i][j];
    obj[rhs] -= t[i][rhs];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded; cannot happen in phase 1
    const Rational pivot = t[leave][enter];
    for (Rational& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational f = obj[enter];
    for (std::size_t j = 0; j <= width; ++j) obj[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return obj[rhs] == 0;
}

Kind positive_vector_kind(const IntMatrix& a) {
  const std::size_t n = a.size();
  // Substitute u = 1 + x with x >= 0.
  std::vector<Rational> row_sums(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_sums[i] += a(i, j);
  }

  // A x - s = 1 - A 1, x, s >= 0.
  std::vector<std::vector<Rational>> fin(n, std::vector<Rational>(2 * n));
  std::vector<Rational> fin_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) fin[i][j] = a(i, j);
    fin[i][n + i] = -1;
    fin_b[i] = 1 - row_sums[i];
  }
  if (lp_feasible(fin, fin_b)) return Kind::finite;

  // A x = -A 1.
  std::vector<std::vector<Rational>> aff(n, std::vector<Rational>(n));
  std::vector<Rational> aff_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aff[i][j] = a(i, j);
    aff_b[i] = -row_sums[i];
  }
  if (lp_feasible(aff, aff_b)) return Kind::affine;
  return Kind::indefinite;
}

std::vector<IndexSet> oracle_components(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> label(n, -1);
  std::vector<IndexSet> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    IndexSet comp;
    std::vector<std::size_t> stack{s};
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w = 0; w < n; ++w) {
        if (w != v && label[w] < 0 && (a(v, w) != 0 || a(w, v) != 0)) {
          label[w] = label[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

IntMatrix restrict_to(const IntMatrix& a, const IndexSet& idx) {
  IntMatrix r(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = a(idx[i], idx[j]);
  }
  return r;
}

}  // namespace

bool oracle_almost_affine(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (oracle_components(a).size() != 1) return false;
  if (positive_vector_kind(a) != Kind::indefinite) return false;
  for (std::size_t k = 0; k < n; ++k) {
    IndexSet rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k) rest.push_back(i);
    }
    const IntMatrix sub = restrict_to(a, rest);
    for (const IndexSet& c : oracle_components(sub)) {
      if (positive_vector_kind(restrict_to(sub, c)) == Kind::indefinite) return false;
    }
  }
  return true;
}

std::optional<Permutation> brute_force_equivalence(const CartanMatrix& m1, const CartanMatrix& m2) {
  const std::size_t n = m1.rank();
  if (m2.rank() != n) return std::nullopt;
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = m2.parity(s[i]) == m1.parity(i);
      for (std::size_t j = 0; j < n && ok; ++j) ok = m2(s[i], s[j]) == m1(i, j);
    }
    if (ok) return Permutation::from_zero_based(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return std::nullopt;
}

std::vector<std::int64_t> brute_force_key(const CartanMatrix& m) {
  const std::size_t n = m.rank();
  std::vector<std::size_t> p(n);  // p[new] = old
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::int64_t> best;
  do {
    std::vector<std::int64_t> key;
    key.reserve(n + n * n);
    for (std::size_t i = 0; i < n; ++i) key.push_back(static_cast<std::int64_t>(m.parity(p[i])));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) key.push_back(m(p[i], p[j]));
    }
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<CartanMatrix> brute_force_rank3_hyperbolic(int max_abs) {
  // Each unordered pair is either unlinked or carries two negative entries.
  std::vector<std::pair<std::int64_t, std::int64_t>> choices{{0, 0}};
  for (int x = 1; x <= max_abs; ++x) {
    for (int y = 1; y <= max_abs; ++y) choices.emplace_back(-x, -y);
  }
  std::map<std::vector<std::int64_t>, CartanMatrix> classes;
  for (const auto& c01 : choices) {
    for (const auto& c02 : choices) {
      for (const auto& c12 : choices) {
        IntMatrix a(3, 0);
        for (std::size_t i = 0; i < 3; ++i) a(i, i) = 2;
        a(0, 1) = c01.first;
        a(1, 0) = c01.second;
        a(0, 2) = c02.first;
        a(2, 0) = c02.second;
        a(1, 2) = c12.first;
        a(2, 1) = c12.second;
        if (!oracle_almost_affine(a)) continue;
        CartanMatrix m = CartanMatrix::validate(a);
        classes.emplace(brute_force_key(m), std::move(m));
      }
    }
  }
  std::vector<CartanMatrix> out;
  for (auto& [key, m] : classes) out.push_back(std::move(m));
  return out;
}

}  // namespace cartan::testing
