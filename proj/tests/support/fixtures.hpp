#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cartan/catalog.hpp"

namespace cartan::testing {

const Catalog& sym_catalog();
const Catalog& nonsym_catalog();

/// Entry by its super-matrix name, searched in both catalogs.
const CatalogEntry& catalog_entry(std::string_view s_name);

/// Hyperbolic matrix by name, searched in both catalogs.
const CartanMatrix& catalog_h(std::string_view h_name);

/// One (first name, matrix) per distinct H-class, in catalog order.
std::vector<std::pair<std::string, CartanMatrix>> distinct_h(const Catalog& cat);

CartanMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows);

}  // namespace cartan::testing
