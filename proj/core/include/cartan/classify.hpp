#pragma once

#include <string_view>
#include <vector>

#include "cartan/cartan_matrix.hpp"
#include "cartan/exact_linalg.hpp"

namespace cartan {

/// Kac-Moody type of an indecomposable even matrix.
enum class Kind { finite, affine, indefinite };

enum class VerdictKind { finite, affine, almost_affine, other_indefinite };

std::string_view to_string(Kind k) noexcept;
std::string_view to_string(VerdictKind k) noexcept;

struct ComponentVerdict {
  IndexSet indices;
  Kind kind;

  friend bool operator==(const ComponentVerdict&, const ComponentVerdict&) = default;
};

/// Overall kind plus one entry per connected component. For decomposable
/// input the overall kind is the worst component (finite < affine <
/// indefinite); an indefinite component makes it other_indefinite, since
/// almost_affine is reserved for indecomposable matrices.
struct TypeVerdict {
  VerdictKind kind;
  std::vector<ComponentVerdict> components;

  bool all_finite_or_affine() const noexcept;

  friend bool operator==(const TypeVerdict&, const TypeVerdict&) = default;
};

/// Principal-minor criterion. Finite iff every principal minor is positive;
/// affine iff det = 0 and every proper principal minor is positive.
/// Throws not_even or decomposable.
Kind trichotomy(const CartanMatrix& m);

/// Throws not_even.
TypeVerdict type_of(const CartanMatrix& m);

/// Classifies a super matrix through its desuperization. All-even input is
/// classified directly. Throws isotropic_unsupported.
TypeVerdict classify_super(const CartanMatrix& m);

/// Raw-matrix kernels shared with the enumerator. `a` is assumed to be an
/// even generalized Cartan matrix whose support on `mask` is connected.
Kind trichotomy_on(const IntMatrix& a, IndexMask mask);

/// Every connected component of the support of `a` on `mask` is finite or
/// affine.
bool finite_or_affine_components(const IntMatrix& a, IndexMask mask);

/// Indecomposable, indefinite, and every main submatrix has only finite or
/// affine components.
bool is_almost_affine(const IntMatrix& a);

}  // namespace cartan
