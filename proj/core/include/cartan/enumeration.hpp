#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cartan/cartan_matrix.hpp"

namespace cartan {

enum class SymmetrizableFilter { all, only_symmetrizable, only_nonsymmetrizable };

inline constexpr int min_census_rank = 3;
inline constexpr int max_census_rank = 10;

struct EnumerationOptions {
  int rank = 3;
  bool super = false;
  SymmetrizableFilter filter = SymmetrizableFilter::all;
  /// Upper bound on |a_ij|. For rank >= 3 almost affine matrices satisfy
  /// a_ij * a_ji <= 4, so 4 loses nothing; see bound_saturated().
  int max_abs_offdiag = 4;
  unsigned jobs = 1;
};

/// Indecomposable even almost affine matrices of the given rank, one
/// canonical form per permutation class, sorted. Throws unsupported_rank.
std::vector<CartanMatrix> enumerate_hyperbolic(const EnumerationOptions& options);

/// Almost affine super matrices (diagonal in {1,2}, at least one odd index)
/// obtained by superizing the even census of the same rank.
std::vector<CartanMatrix> enumerate_super_almost_affine(const EnumerationOptions& options);

/// Brute-force search over every parity-labelled matrix with off-diagonal
/// entries in [-max_abs_offdiag, 0]. Exponential; kept as an oracle for
/// small ranks.
std::vector<CartanMatrix> enumerate_super_direct(const EnumerationOptions& options);

/// Connected matrices of finite or affine type with `rank` indices and
/// entries bounded as in `options`; the building blocks of the search.
struct FiniteAffineLevel {
  std::vector<CartanMatrix> finite;
  std::vector<CartanMatrix> affine;
};
FiniteAffineLevel enumerate_finite_affine(int rank, int max_abs_offdiag = 4);

/// True when some class uses an entry at the bound whose pair product would
/// still allow a larger entry, i.e. raising the bound might find more.
bool bound_saturated(const std::vector<CartanMatrix>& classes, int max_abs_offdiag);

struct RankCounts {
  std::size_t hyperbolic_sym = 0;
  std::size_t hyperbolic_nonsym = 0;
  std::size_t superizable_sym = 0;
  std::size_t superizable_nonsym = 0;
  std::size_t multi_superizable_sym = 0;
  std::size_t multi_superizable_nonsym = 0;
  std::size_t super_sym = 0;
  std::size_t super_nonsym = 0;

  RankCounts& operator+=(const RankCounts& o);
  friend bool operator==(const RankCounts&, const RankCounts&) = default;
};

struct PairingClass {
  CartanMatrix h;
  bool symmetrizable;
  std::vector<CartanMatrix> superizations;
};

struct CensusReport {
  int first_rank = min_census_rank;
  int last_rank = max_census_rank;
  std::map<int, RankCounts> per_rank;
  RankCounts totals;
  /// H-classes with at least one superization, in rank then canonical order.
  std::vector<PairingClass> pairs;
  bool bound_saturated = false;

  /// Multiplicity -> number of H-classes with that many superizations.
  std::map<std::size_t, std::size_t> multiplicity_histogram(bool symmetrizable) const;
};

CensusReport pairing_report(int first_rank, int last_rank,
                            SymmetrizableFilter filter = SymmetrizableFilter::all,
                            int max_abs_offdiag = 4, unsigned jobs = 1);

}  // namespace cartan
