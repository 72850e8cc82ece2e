#include "cartan/classify.hpp"

#include <algorithm>
#include <bit>

#include "cartan/error.hpp"
#include "cartan/supermap.hpp"

namespace cartan {

std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::finite: return "finite";
    case Kind::affine: return "affine";
    case Kind::indefinite: return "indefinite";
  }
  return "?";
}

std::string_view to_string(VerdictKind k) noexcept {
  switch (k) {
    case VerdictKind::finite: return "finite";
    case VerdictKind::affine: return "affine";
    case VerdictKind::almost_affine: return "almost_affine";
    case VerdictKind::other_indefinite: return "other_indefinite";
  }
  return "?";
}

bool TypeVerdict::all_finite_or_affine() const noexcept {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentVerdict& c) { return c.kind != Kind::indefinite; });
}

namespace {

std::vector<IndexMask> mask_components(const IntMatrix& a, IndexMask mask) {
  std::vector<IndexMask> out;
  IndexMask rest = mask;
  while (rest != 0) {
    IndexMask comp = rest & (~rest + 1);
    IndexMask frontier = comp;
    while (frontier != 0) {
      const auto i = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      for (IndexMask cand = rest & ~comp; cand != 0; cand &= cand - 1) {
        const auto j = static_cast<std::size_t>(std::countr_zero(cand));
        if (a(i, j) != 0) {
          comp |= IndexMask{1} << j;
          frontier |= IndexMask{1} << j;
        }
      }
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

void require_mask_rank(std::size_t n) {
  if (n > max_mask_rank) {
    throw Error(ErrorCode::index_out_of_range,
                "principal-minor classification supports rank <= " + std::to_string(max_mask_rank));
  }
}

void require_even(const CartanMatrix& m) {
  if (!m.is_even()) {
    throw Error(ErrorCode::not_even, "matrix has odd indices (parity " + m.parity_string() + ")");
  }
}

}  // namespace

// A decomposable principal minor is the product of its connected blocks, so
// checking the connected ones is the same as checking all of them.
Kind trichotomy_on(const IntMatrix& a, IndexMask mask) {
  for (IndexMask sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
    if (!is_connected_on(a, sub)) continue;
    if (principal_minor_sign(a, sub) <= 0) return Kind::indefinite;
  }
  const int det = principal_minor_sign(a, mask);
  if (det > 0) return Kind::finite;
  if (det == 0) return Kind::affine;
  return Kind::indefinite;
}

bool finite_or_affine_components(const IntMatrix& a, IndexMask mask) {
  for (IndexMask comp : mask_components(a, mask))
    if (trichotomy_on(a, comp) == Kind::indefinite) return false;
  return true;
}

bool is_almost_affine(const IntMatrix& a) {
  const std::size_t n = a.size();
  require_mask_rank(n);
  const IndexMask all = full_mask(n);
  if (!is_connected_on(a, all)) return false;
  if (trichotomy_on(a, all) != Kind::indefinite) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (!finite_or_affine_components(a, all & ~(IndexMask{1} << i))) return false;
  return true;
}

Kind trichotomy(const CartanMatrix& m) {
  require_even(m);
  require_mask_rank(m.rank());
  if (!is_indecomposable(m)) throw Error(ErrorCode::decomposable, "trichotomy needs an indecomposable matrix");
  return trichotomy_on(m.entries(), full_mask(m.rank()));
}

TypeVerdict type_of(const CartanMatrix& m) {
  require_even(m);
  require_mask_rank(m.rank());
  const IntMatrix& a = m.entries();
  TypeVerdict v{VerdictKind::finite, {}};
  Kind worst = Kind::finite;
  for (IndexSet& comp : components(m)) {
    const Kind k = trichotomy_on(a, to_mask(comp));
    worst = std::max(worst, k);
    v.components.push_back({std::move(comp), k});
  }
  switch (worst) {
    case Kind::finite: v.kind = VerdictKind::finite; break;
    case Kind::affine: v.kind = VerdictKind::affine; break;
    case Kind::indefinite:
      v.kind = (v.components.size() == 1 && is_almost_affine(a)) ? VerdictKind::almost_affine
                                                                  : VerdictKind::other_indefinite;
      break;
  }
  return v;
}

TypeVerdict classify_super(const CartanMatrix& m) {
  if (m.has_isotropic()) {
    throw Error(ErrorCode::isotropic_unsupported,
                "odd isotropic indices need odd reflections (parity " + m.parity_string() + ")");
  }
  if (m.is_even()) return type_of(m);
  return type_of(desuperize(m));
}

}  // namespace cartan
