#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "cartan/cartan_matrix.hpp"
#include "cartan/catalog.hpp"
#include "cartan/classify.hpp"
#include "cartan/enumeration.hpp"
#include "cartan/geometry.hpp"
#include "cartan/permutation.hpp"
#include "cartan/supermap.hpp"

namespace cartan {

using json = nlohmann::ordered_json;

struct NamedMatrix {
  std::optional<std::string> name;
  CartanMatrix matrix;
};

/// {"name": optional string, "parity": optional "eoi..." string, "rows": [[...]]}.
/// Throws parse_error for schema problems and the validate() codes otherwise.
NamedMatrix matrix_from_json(const json& j);
json matrix_to_json(const CartanMatrix& m, const std::optional<std::string>& name = std::nullopt);

/// 1-based integer array.
Permutation permutation_from_json(const json& j);
json permutation_to_json(const Permutation& p);

json to_json(const TypeVerdict& v);
json to_json(const SuperizationReport& r);
json to_json(const GramData& g);
json to_json(const WallEmbedding& w);
json to_json(const CensusReport& r);
json to_json(const EntryReport& r);
json to_json(const CatalogStats& s);

}  // namespace cartan
