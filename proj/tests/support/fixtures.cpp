#include "fixtures.hpp"

#include <set>
#include <stdexcept>

#include "cartan/equivalence.hpp"

namespace cartan::testing {

const Catalog& sym_catalog() {
  static const Catalog c = load_bundled_catalog(Section::sym);
  return c;
}

const Catalog& nonsym_catalog() {
  static const Catalog c = load_bundled_catalog(Section::nonsym);
  return c;
}

const CatalogEntry& catalog_entry(std::string_view s_name) {
  for (const Catalog* c : {&sym_catalog(), &nonsym_catalog()}) {
    for (const CatalogEntry& e : c->entries) {
      if (e.s_name == s_name) return e;
    }
  }
  throw std::out_of_range("no catalog entry " + std::string(s_name));
}

const CartanMatrix& catalog_h(std::string_view h_name) {
  for (const Catalog* c : {&sym_catalog(), &nonsym_catalog()}) {
    for (const CatalogEntry& e : c->entries) {
      if (e.h_name == h_name) return e.h;
    }
  }
  throw std::out_of_range("no catalog matrix " + std::string(h_name));
}

std::vector<std::pair<std::string, CartanMatrix>> distinct_h(const Catalog& cat) {
  std::set<CartanMatrix> seen;
  std::vector<std::pair<std::string, CartanMatrix>> out;
  for (const CatalogEntry& e : cat.entries) {
    if (seen.insert(canonical_form(e.h).matrix).second) out.emplace_back(e.h_name, e.h);
  }
  return out;
}

CartanMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return CartanMatrix::validate(r);
}

}  // namespace cartan::testing
