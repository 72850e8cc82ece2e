#include "cartan/cartan_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "cartan/error.hpp"

namespace cartan {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::non_square: return "NonSquare";
    case ErrorCode::diagonal_out_of_range: return "DiagonalOutOfRange";
    case ErrorCode::positive_off_diagonal: return "PositiveOffDiagonal";
    case ErrorCode::zero_pattern_asymmetric: return "ZeroPatternAsymmetric";
    case ErrorCode::parity_mismatch: return "ParityMismatch";
    case ErrorCode::rank_too_small: return "RankTooSmall";
    case ErrorCode::empty_set: return "EmptySet";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::not_even: return "NotEven";
    case ErrorCode::decomposable: return "Decomposable";
    case ErrorCode::isotropic_unsupported: return "IsotropicUnsupported";
    case ErrorCode::no_odd_index: return "NoOddIndex";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::not_almost_affine: return "NotAlmostAffine";
    case ErrorCode::not_symmetrizable: return "NotSymmetrizable";
    case ErrorCode::not_lorentzian: return "NotLorentzian";
    case ErrorCode::pair_mismatch: return "PairMismatch";
    case ErrorCode::unsupported_rank: return "UnsupportedRank";
    case ErrorCode::invalid_permutation: return "InvalidPermutation";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::tolerance_exceeded: return "ToleranceExceeded";
  }
  return "Unknown";
}

std::int64_t diagonal_for(Parity p) noexcept {
  switch (p) {
    case Parity::even: return 2;
    case Parity::odd_non_isotropic: return 1;
    case Parity::odd_isotropic: return 0;
  }
  return 2;
}

char parity_code(Parity p) noexcept {
  switch (p) {
    case Parity::even: return 'e';
    case Parity::odd_non_isotropic: return 'o';
    case Parity::odd_isotropic: return 'i';
  }
  return '?';
}

Parity parity_from_code(char c) {
  switch (c) {
    case 'e': return Parity::even;
    case 'o': return Parity::odd_non_isotropic;
    case 'i': return Parity::odd_isotropic;
    default: break;
  }
  throw Error(ErrorCode::parse_error, std::string("parity code must be one of e/o/i, got '") + c + "'");
}

std::optional<Parity> parity_from_diagonal(std::int64_t d) noexcept {
  switch (d) {
    case 2: return Parity::even;
    case 1: return Parity::odd_non_isotropic;
    case 0: return Parity::odd_isotropic;
    default: return std::nullopt;
  }
}

namespace {

std::string at(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

}  // namespace

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<std::int64_t>>& rows,
                                    std::optional<std::vector<Parity>> parity) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::non_square, "matrix has no rows");
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      std::ostringstream os;
      os << "row " << i + 1 << " has " << rows[i].size() << " entries, expected " << n;
      throw Error(ErrorCode::non_square, os.str());
    }
    std::copy(rows[i].begin(), rows[i].end(), a.row(i).begin());
  }
  return validate(std::move(a), std::move(parity));
}

CartanMatrix CartanMatrix::validate(IntMatrix a, std::optional<std::vector<Parity>> parity) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorCode::non_square, "matrix has no rows");
  std::vector<Parity> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto inferred = parity_from_diagonal(a(i, i));
    if (!inferred) {
      throw Error(ErrorCode::diagonal_out_of_range,
                  "diagonal entry " + at(i, i) + " = " + std::to_string(a(i, i)) + " not in {0,1,2}");
    }
    p[i] = *inferred;
  }
  if (parity) {
    if (parity->size() != n) {
      throw Error(ErrorCode::parity_mismatch, "parity has length " + std::to_string(parity->size()) +
                                                  ", matrix rank is " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if ((*parity)[i] != p[i]) {
        throw Error(ErrorCode::parity_mismatch, std::string("index ") + std::to_string(i + 1) +
                                                    " labelled '" + parity_code((*parity)[i]) +
                                                    "' but diagonal is " + std::to_string(a(i, i)));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) {
        throw Error(ErrorCode::positive_off_diagonal,
                    "entry " + at(i, j) + " = " + std::to_string(a(i, j)) + " is positive");
      }
      if ((a(i, j) == 0) != (a(j, i) == 0)) {
        throw Error(ErrorCode::zero_pattern_asymmetric,
                    "entry " + at(i, j) + " and its transpose " + at(j, i) + " disagree on being zero");
      }
    }
  }
  return CartanMatrix(std::move(a), std::move(p));
}

CartanMatrix CartanMatrix::unchecked(IntMatrix entries, std::vector<Parity> parity) {
  return CartanMatrix(std::move(entries), std::move(parity));
}

std::string CartanMatrix::parity_string() const {
  std::string s;
  s.reserve(parity_.size());
  for (Parity p : parity_) s.push_back(parity_code(p));
  return s;
}

bool CartanMatrix::is_even() const noexcept {
  return std::all_of(parity_.begin(), parity_.end(), [](Parity p) { return p == Parity::even; });
}

bool CartanMatrix::has_odd_non_isotropic() const noexcept {
  return std::find(parity_.begin(), parity_.end(), Parity::odd_non_isotropic) != parity_.end();
}

bool CartanMatrix::has_isotropic() const noexcept {
  return std::find(parity_.begin(), parity_.end(), Parity::odd_isotropic) != parity_.end();
}

std::vector<std::vector<std::int64_t>> CartanMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    auto r = entries_.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::strong_ordering operator<=>(const CartanMatrix& a, const CartanMatrix& b) {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.parity_ <=> b.parity_; c != 0) return c;
  const auto fa = a.entries_.flat();
  const auto fb = b.entries_.flat();
  return std::lexicographical_compare_three_way(fa.begin(), fa.end(), fb.begin(), fb.end());
}

std::vector<IndexSet> components(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::vector<IndexSet> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    IndexSet comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (!seen[y] && y != x && a(x, y) != 0) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<IndexSet> components(const CartanMatrix& m) { return components(m.entries()); }

bool is_indecomposable(const CartanMatrix& m) { return components(m).size() == 1; }

CartanMatrix main_submatrix(const CartanMatrix& m, std::size_t i) {
  if (m.rank() < 2) throw Error(ErrorCode::rank_too_small, "cannot strike an index from a rank-1 matrix");
  if (i >= m.rank()) {
    throw Error(ErrorCode::index_out_of_range,
                "index " + std::to_string(i + 1) + " outside 1.." + std::to_string(m.rank()));
  }
  IndexSet keep;
  for (std::size_t k = 0; k < m.rank(); ++k)
    if (k != i) keep.push_back(k);
  return principal_submatrix(m, keep);
}

CartanMatrix principal_submatrix(const CartanMatrix& m, const IndexSet& indices) {
  if (indices.empty()) throw Error(ErrorCode::empty_set, "principal submatrix of an empty index set");
  IndexSet sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= m.rank()) {
    throw Error(ErrorCode::index_out_of_range, "index set is not a subset of the matrix indices");
  }
  const std::size_t k = sorted.size();
  IntMatrix sub(k);
  std::vector<Parity> par(k);
  for (std::size_t r = 0; r < k; ++r) {
    par[r] = m.parity(sorted[r]);
    for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(sorted[r], sorted[c]);
  }
  return CartanMatrix::unchecked(std::move(sub), std::move(par));
}

std::optional<Symmetrizer> symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> assigned(n, false);
  for (const IndexSet& comp : components(a)) {
    // Spanning tree by DFS from the smallest index.
    const std::size_t root = comp.front();
    d[root] = 1;
    assigned[root] = true;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j : comp) {
        if (j == i || a(i, j) == 0 || assigned[j]) continue;
        d[j] = d[i] * make_rational(a(i, j), a(j, i));
        assigned[j] = true;
        stack.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[i] * a(i, j) != d[j] * a(j, i)) return std::nullopt;
  return Symmetrizer{std::move(d)};
}

std::optional<Symmetrizer> symmetrizer(const CartanMatrix& m) { return symmetrizer(m.entries()); }

bool is_symmetrizable(const CartanMatrix& m) { return symmetrizer(m).has_value(); }

std::optional<RationalMatrix> symmetrize(const CartanMatrix& m) {
  auto sym = symmetrizer(m);
  if (!sym) return std::nullopt;
  const std::size_t n = m.rank();
  RationalMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = sym->d[i] * m(i, j);
  return b;
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "not a rational number: '" + text + "'");
  }
}

}  // namespace cartan
