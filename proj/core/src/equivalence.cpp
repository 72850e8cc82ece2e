#include "cartan/equivalence.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "cartan/error.hpp"

namespace cartan {
namespace {

using Key = std::vector<std::int64_t>;

struct Partial {
  std::vector<std::size_t> order;  // order[k] = original index at position k
  std::vector<bool> used;
};

struct ComponentForm {
  IndexSet members;
  std::vector<std::size_t> order;
  Key key;
};

std::int64_t parity_rank(Parity p) { return static_cast<std::int64_t>(p); }

void append_chunk(const CartanMatrix& m, const std::vector<std::size_t>& order, std::size_t v, Key& out) {
  for (std::size_t placed : order) {
    out.push_back(m(v, placed));
    out.push_back(m(placed, v));
  }
  out.push_back(parity_rank(m.parity(v)));
}

// States whose unplaced vertices see the placed prefix identically have the
// same futures; keep one of them.
Key future_signature(const CartanMatrix& m, const IndexSet& members, const Partial& s) {
  Key sig;
  for (std::size_t u : members) {
    sig.push_back(s.used[u] ? 1 : 0);
  }
  for (std::size_t u : members) {
    if (s.used[u]) continue;
    for (std::size_t placed : s.order) {
      sig.push_back(m(u, placed));
      sig.push_back(m(placed, u));
    }
  }
  return sig;
}

ComponentForm canonical_component(const CartanMatrix& m, const IndexSet& members) {
  std::vector<Partial> states{Partial{{}, std::vector<bool>(m.rank(), false)}};
  Key key;
  for (std::size_t k = 0; k < members.size(); ++k) {
    Key best;
    bool have_best = false;
    std::vector<Partial> next;
    Key chunk;
    for (const Partial& s : states) {
      for (std::size_t v : members) {
        if (s.used[v]) continue;
        chunk.clear();
        append_chunk(m, s.order, v, chunk);
        if (have_best && chunk > best) continue;
        if (!have_best || chunk < best) {
          best = chunk;
          have_best = true;
          next.clear();
        }
        Partial t = s;
        t.order.push_back(v);
        t.used[v] = true;
        next.push_back(std::move(t));
      }
    }
    key.insert(key.end(), best.begin(), best.end());

    std::vector<std::pair<Key, std::size_t>> sigs;
    sigs.reserve(next.size());
    for (std::size_t i = 0; i < next.size(); ++i) sigs.emplace_back(future_signature(m, members, next[i]), i);
    std::stable_sort(sigs.begin(), sigs.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    states.clear();
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      if (i > 0 && sigs[i].first == sigs[i - 1].first) continue;
      states.push_back(std::move(next[sigs[i].second]));
    }
  }
  return ComponentForm{members, std::move(states.front().order), std::move(key)};
}

}  // namespace

CanonicalForm canonical_form(const CartanMatrix& m) {
  std::vector<ComponentForm> forms;
  for (const IndexSet& comp : components(m)) forms.push_back(canonical_component(m, comp));
  std::stable_sort(forms.begin(), forms.end(), [](const ComponentForm& x, const ComponentForm& y) {
    if (x.members.size() != y.members.size()) return x.members.size() > y.members.size();
    return x.key < y.key;
  });
  std::vector<std::size_t> image(m.rank());
  std::size_t pos = 0;
  for (const ComponentForm& f : forms)
    for (std::size_t v : f.order) image[v] = pos++;
  Permutation sigma = Permutation::from_zero_based(std::move(image));
  return CanonicalForm{permute(m, sigma), std::move(sigma)};
}

bool is_equivalence_witness(const CartanMatrix& m1, const CartanMatrix& m2, const Permutation& sigma) {
  const std::size_t n = m1.rank();
  if (m2.rank() != n || sigma.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (m2.parity(sigma(i)) != m1.parity(i)) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (m2(sigma(i), sigma(j)) != m1(i, j)) return false;
  }
  return true;
}

std::optional<Permutation> are_equivalent(const CartanMatrix& m1, const CartanMatrix& m2) {
  if (m1.rank() != m2.rank()) return std::nullopt;
  const CanonicalForm c1 = canonical_form(m1);
  const CanonicalForm c2 = canonical_form(m2);
  if (!(c1.matrix == c2.matrix)) return std::nullopt;
  Permutation sigma = c1.sigma.then(c2.sigma.inverse());
  if (!is_equivalence_witness(m1, m2, sigma)) {
    throw std::logic_error("canonical forms agree but the composed witness does not verify");
  }
  return sigma;
}

}  // namespace cartan
