#include "cartan/enumeration.hpp"

#include <atomic>
#include <bit>
#include <set>
#include <thread>
#include <utility>

#include "cartan/classify.hpp"
#include "cartan/equivalence.hpp"
#include "cartan/error.hpp"
#include "cartan/exact_linalg.hpp"
#include "cartan/supermap.hpp"

// Completeness of the search rests on two facts about a connected matrix X
// of finite, affine or almost affine type:
//   * X has a vertex whose removal leaves X connected (a leaf of any
//     spanning tree), and
//   * the connected remainder is finite when X is finite or affine, and
//     finite or affine when X is almost affine.
// So connected finite/affine blocks of rank r are one-vertex extensions of
// connected finite blocks of rank r-1, and almost affine matrices of rank n
// are one-vertex extensions of connected finite/affine blocks of rank n-1.
// While the new vertex is wired to the old ones in index order, each
// partial matrix {0..j, new} is a proper principal submatrix of the result
// and must itself have finite/affine components.

namespace cartan {
namespace {

struct EntryPair {
  std::int64_t to_new;    // a(old, new)
  std::int64_t from_new;  // a(new, old)
};

// For rank >= 3 every pair sits inside a main submatrix, so a_ij a_ji <= 4.
std::vector<EntryPair> pair_choices(int max_abs) {
  std::vector<EntryPair> out{{0, 0}};
  for (std::int64_t p = 1; p <= max_abs; ++p)
    for (std::int64_t q = 1; q <= max_abs; ++q)
      if (p * q <= 4) out.push_back({-p, -q});
  return out;
}

IndexMask component_containing(const IntMatrix& a, IndexMask mask, std::size_t v) {
  IndexMask comp = IndexMask{1} << v;
  IndexMask frontier = comp;
  while (frontier != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    for (IndexMask cand = mask & ~comp; cand != 0; cand &= cand - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(cand));
      if (a(i, j) != 0) {
        comp |= IndexMask{1} << j;
        frontier |= IndexMask{1} << j;
      }
    }
  }
  return comp;
}

enum class Target { finite_affine, almost_affine };

class Extender {
 public:
  Extender(Target target, int max_abs) : target_(target), choices_(pair_choices(max_abs)) {}

  // Calls `emit` for every labelled extension of `base` by one vertex that
  // meets the target.
  template <typename Emit>
  void run(const CartanMatrix& base, Emit&& emit) {
    const std::size_t k = base.rank();
    a_ = IntMatrix(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a_(i, j) = base(i, j);
    a_(k, k) = 2;
    recurse(0, false, emit);
  }

 private:
  template <typename Emit>
  void recurse(std::size_t j, bool connected, Emit& emit) {
    const std::size_t v = a_.size() - 1;
    if (j == v) {
      if (!connected) return;
      const IndexMask all = full_mask(a_.size());
      if (target_ == Target::finite_affine) {
        if (trichotomy_on(a_, all) == Kind::indefinite) return;
      } else if (!is_almost_affine(a_)) {
        return;
      }
      emit(a_);
      return;
    }
    for (const EntryPair& c : choices_) {
      a_(j, v) = c.to_new;
      a_(v, j) = c.from_new;
      const bool edge = c.to_new != 0;
      // {0..j, v} is proper unless it is the whole almost affine candidate.
      const bool proper = target_ == Target::finite_affine || j + 1 < v;
      if (edge && proper) {
        const IndexMask mask = full_mask(j + 1) | (IndexMask{1} << v);
        if (trichotomy_on(a_, component_containing(a_, mask, v)) == Kind::indefinite) continue;
      }
      recurse(j + 1, connected || edge, emit);
    }
    a_(j, v) = 0;
    a_(v, j) = 0;
  }

  Target target_;
  std::vector<EntryPair> choices_;
  IntMatrix a_;
};

CartanMatrix even_matrix(const IntMatrix& a) {
  return CartanMatrix::unchecked(a, std::vector<Parity>(a.size(), Parity::even));
}

// Extends every base on up to `jobs` threads and returns the canonical
// classes, sorted. Each worker keeps its own set; the union is independent
// of scheduling.
std::set<CartanMatrix> extend_all(const std::vector<CartanMatrix>& bases, Target target, int max_abs,
                                  unsigned jobs) {
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(bases.size())));
  std::vector<std::set<CartanMatrix>> partial(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    Extender ext(target, max_abs);
    for (std::size_t b = next++; b < bases.size(); b = next++) {
      ext.run(bases[b], [&](const IntMatrix& a) { partial[w].insert(canonical_form(even_matrix(a)).matrix); });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  std::set<CartanMatrix> out;
  for (auto& s : partial) out.merge(s);
  return out;
}

void require_census_rank(int rank) {
  if (rank < min_census_rank || rank > max_census_rank) {
    throw Error(ErrorCode::unsupported_rank,
                "rank " + std::to_string(rank) + " outside " + std::to_string(min_census_rank) + ".." +
                    std::to_string(max_census_rank) +
                    " (rank-2 indefinite matrices form infinite families and are excluded)");
  }
}

void require_bound(int max_abs) {
  if (max_abs < 1) throw Error(ErrorCode::validation_error, "max_abs_offdiag must be at least 1");
}

bool keep(SymmetrizableFilter filter, bool symmetrizable) {
  switch (filter) {
    case SymmetrizableFilter::all: return true;
    case SymmetrizableFilter::only_symmetrizable: return symmetrizable;
    case SymmetrizableFilter::only_nonsymmetrizable: return !symmetrizable;
  }
  return true;
}

}  // namespace

FiniteAffineLevel enumerate_finite_affine(int rank, int max_abs_offdiag) {
  require_bound(max_abs_offdiag);
  if (rank < 1 || rank > max_census_rank) {
    throw Error(ErrorCode::unsupported_rank, "finite/affine blocks are generated for ranks 1.." +
                                                 std::to_string(max_census_rank));
  }
  FiniteAffineLevel level;
  level.finite.push_back(CartanMatrix::validate(IntMatrix(1, 2)));
  for (int r = 2; r <= rank; ++r) {
    const auto found = extend_all(level.finite, Target::finite_affine, max_abs_offdiag, 1);
    FiniteAffineLevel next;
    for (const CartanMatrix& m : found) {
      (trichotomy_on(m.entries(), full_mask(m.rank())) == Kind::finite ? next.finite : next.affine).push_back(m);
    }
    level = std::move(next);
  }
  return level;
}

std::vector<CartanMatrix> enumerate_hyperbolic(const EnumerationOptions& options) {
  require_census_rank(options.rank);
  require_bound(options.max_abs_offdiag);
  FiniteAffineLevel blocks = enumerate_finite_affine(options.rank - 1, options.max_abs_offdiag);
  std::vector<CartanMatrix> bases = std::move(blocks.finite);
  bases.insert(bases.end(), blocks.affine.begin(), blocks.affine.end());
  const auto found = extend_all(bases, Target::almost_affine, options.max_abs_offdiag, options.jobs);
  std::vector<CartanMatrix> out;
  for (const CartanMatrix& m : found)
    if (keep(options.filter, is_symmetrizable(m))) out.push_back(m);
  return out;
}

std::vector<CartanMatrix> enumerate_super_almost_affine(const EnumerationOptions& options) {
  std::set<CartanMatrix> out;
  for (const CartanMatrix& h : enumerate_hyperbolic(options)) {
    for (CartanMatrix& s : find_superizations(h).superizations) out.insert(std::move(s));
  }
  return {out.begin(), out.end()};
}

std::vector<CartanMatrix> enumerate_super_direct(const EnumerationOptions& options) {
  require_census_rank(options.rank);
  require_bound(options.max_abs_offdiag);
  const auto n = static_cast<std::size_t>(options.rank);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<EntryPair> choices{{0, 0}};
  for (std::int64_t p = 1; p <= options.max_abs_offdiag; ++p)
    for (std::int64_t q = 1; q <= options.max_abs_offdiag; ++q) choices.push_back({-p, -q});

  std::set<CartanMatrix> out;
  IntMatrix a(n, 0);
  std::vector<std::size_t> digit(pairs.size(), 0);
  for (;;) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      a(pairs[p].first, pairs[p].second) = choices[digit[p]].to_new;
      a(pairs[p].second, pairs[p].first) = choices[digit[p]].from_new;
    }
    if (is_connected_on(a, full_mask(n))) {
      for (std::size_t odd = 1; odd < (std::size_t{1} << n); ++odd) {
        std::vector<Parity> par(n);
        for (std::size_t i = 0; i < n; ++i) {
          par[i] = (odd >> i & 1U) ? Parity::odd_non_isotropic : Parity::even;
          a(i, i) = diagonal_for(par[i]);
        }
        const CartanMatrix s = CartanMatrix::unchecked(a, par);
        if (classify_super(s).kind != VerdictKind::almost_affine) continue;
        if (!keep(options.filter, is_symmetrizable(s))) continue;
        out.insert(canonical_form(s).matrix);
      }
    }
    std::size_t p = 0;
    while (p < digit.size() && ++digit[p] == choices.size()) digit[p++] = 0;
    if (p == digit.size()) break;
  }
  return {out.begin(), out.end()};
}

bool bound_saturated(const std::vector<CartanMatrix>& classes, int max_abs_offdiag) {
  const std::int64_t bound = max_abs_offdiag;
  for (const CartanMatrix& m : classes) {
    for (std::size_t i = 0; i < m.rank(); ++i) {
      for (std::size_t j = 0; j < m.rank(); ++j) {
        if (i == j) continue;
        const std::int64_t p = -m(i, j);
        const std::int64_t q = -m(j, i);
        if (p == bound && (bound + 1) * q <= 4) return true;
      }
    }
  }
  return false;
}

RankCounts& RankCounts::operator+=(const RankCounts& o) {
  hyperbolic_sym += o.hyperbolic_sym;
  hyperbolic_nonsym += o.hyperbolic_nonsym;
  superizable_sym += o.superizable_sym;
  superizable_nonsym += o.superizable_nonsym;
  multi_superizable_sym += o.multi_superizable_sym;
  multi_superizable_nonsym += o.multi_superizable_nonsym;
  super_sym += o.super_sym;
  super_nonsym += o.super_nonsym;
  return *this;
}

std::map<std::size_t, std::size_t> CensusReport::multiplicity_histogram(bool symmetrizable) const {
  std::map<std::size_t, std::size_t> hist;
  for (const PairingClass& p : pairs)
    if (p.symmetrizable == symmetrizable) ++hist[p.superizations.size()];
  return hist;
}

CensusReport pairing_report(int first_rank, int last_rank, SymmetrizableFilter filter, int max_abs_offdiag,
                            unsigned jobs) {
  require_census_rank(first_rank);
  require_census_rank(last_rank);
  if (first_rank > last_rank) throw Error(ErrorCode::unsupported_rank, "empty rank range");
  CensusReport report;
  report.first_rank = first_rank;
  report.last_rank = last_rank;
  for (int r = first_rank; r <= last_rank; ++r) {
    EnumerationOptions opts;
    opts.rank = r;
    opts.filter = filter;
    opts.max_abs_offdiag = max_abs_offdiag;
    opts.jobs = jobs;
    const auto hyperbolic = enumerate_hyperbolic(opts);
    report.bound_saturated = report.bound_saturated || bound_saturated(hyperbolic, max_abs_offdiag);
    RankCounts counts;
    for (const CartanMatrix& h : hyperbolic) {
      const bool sym = is_symmetrizable(h);
      ++(sym ? counts.hyperbolic_sym : counts.hyperbolic_nonsym);
      SuperizationReport sup = find_superizations(h);
      if (sup.superizations.empty()) continue;
      ++(sym ? counts.superizable_sym : counts.superizable_nonsym);
      if (sup.multiplicity() >= 2) ++(sym ? counts.multi_superizable_sym : counts.multi_superizable_nonsym);
      (sym ? counts.super_sym : counts.super_nonsym) += sup.multiplicity();
      report.pairs.push_back(PairingClass{h, sym, std::move(sup.superizations)});
    }
    report.per_rank[r] = counts;
    report.totals += counts;
  }
  return report;
}

}  // namespace cartan
