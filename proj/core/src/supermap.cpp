#include "cartan/supermap.hpp"

#include <set>

#include "cartan/classify.hpp"
#include "cartan/equivalence.hpp"
#include "cartan/error.hpp"

namespace cartan {

CartanMatrix desuperize(const CartanMatrix& s) {
  if (s.has_isotropic()) {
    throw Error(ErrorCode::isotropic_unsupported, "cannot desuperize an odd isotropic index (diagonal 0)");
  }
  if (!s.has_odd_non_isotropic()) throw Error(ErrorCode::no_odd_index, "matrix has no diagonal-1 row");
  IntMatrix a = s.entries();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (s.parity(i) != Parity::odd_non_isotropic) continue;
    for (auto& x : a.row(i)) x *= 2;
  }
  return CartanMatrix::unchecked(std::move(a), std::vector<Parity>(s.rank(), Parity::even));
}

bool verify_pair(const CartanMatrix& s, const CartanMatrix& h, const std::optional<Permutation>& sigma) {
  if (s.rank() != h.rank()) {
    throw Error(ErrorCode::size_mismatch, "super matrix has rank " + std::to_string(s.rank()) +
                                              ", even matrix has rank " + std::to_string(h.rank()));
  }
  if (sigma && sigma->size() != s.rank()) {
    throw Error(ErrorCode::size_mismatch, "permutation has " + std::to_string(sigma->size()) +
                                              " entries for rank " + std::to_string(s.rank()));
  }
  const CartanMatrix d = desuperize(s);
  const Permutation p = sigma ? *sigma : Permutation::identity(s.rank());
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j)
      if (h(p(i), p(j)) != d(i, j)) return false;
  return true;
}

SuperizationReport find_superizations(const CartanMatrix& h, SuperizeOptions options) {
  if (!h.is_even()) throw Error(ErrorCode::not_even, "superization starts from an even matrix");
  if (options.require_almost_affine && !is_almost_affine(h.entries())) {
    throw Error(ErrorCode::not_almost_affine, "matrix is not almost affine");
  }
  const std::size_t n = h.rank();
  std::vector<std::size_t> halvable;
  for (std::size_t i = 0; i < n; ++i) {
    bool all_even = true;
    for (std::int64_t x : h.entries().row(i)) all_even = all_even && (x % 2 == 0);
    if (all_even) halvable.push_back(i);
  }

  std::set<CartanMatrix> classes;
  const std::size_t subsets = std::size_t{1} << halvable.size();
  for (std::size_t bits = 1; bits < subsets; ++bits) {
    IntMatrix a = h.entries();
    std::vector<Parity> par(n, Parity::even);
    for (std::size_t b = 0; b < halvable.size(); ++b) {
      if (!(bits >> b & 1U)) continue;
      const std::size_t row = halvable[b];
      for (auto& x : a.row(row)) x /= 2;
      par[row] = Parity::odd_non_isotropic;
    }
    const CartanMatrix s = CartanMatrix::validate(std::move(a), std::move(par));
    if (options.require_almost_affine && classify_super(s).kind != VerdictKind::almost_affine) continue;
    classes.insert(canonical_form(s).matrix);
  }
  return SuperizationReport{h, std::vector<CartanMatrix>(classes.begin(), classes.end())};
}

}  // namespace cartan
