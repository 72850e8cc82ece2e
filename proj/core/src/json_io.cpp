#include "cartan/json_io.hpp"

#include "cartan/error.hpp"

namespace cartan {
namespace {

json rational_matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (const Rational& x : m.row(i)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

json counts_to_json(const RankCounts& c) {
  return json{{"hyperbolic_sym", c.hyperbolic_sym},
              {"hyperbolic_nonsym", c.hyperbolic_nonsym},
              {"hyperbolic", c.hyperbolic_sym + c.hyperbolic_nonsym},
              {"superizable_sym", c.superizable_sym},
              {"superizable_nonsym", c.superizable_nonsym},
              {"multi_superizable_sym", c.multi_superizable_sym},
              {"multi_superizable_nonsym", c.multi_superizable_nonsym},
              {"super_sym", c.super_sym},
              {"super_nonsym", c.super_nonsym}};
}

}  // namespace

NamedMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "matrix must be a JSON object");
  if (!j.contains("rows") || !j["rows"].is_array()) {
    throw Error(ErrorCode::parse_error, "matrix object needs a \"rows\" array");
  }
  std::optional<std::string> name;
  if (j.contains("name") && !j["name"].is_null()) {
    if (!j["name"].is_string()) throw Error(ErrorCode::parse_error, "\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (const json& r : j["rows"]) {
    if (!r.is_array()) throw Error(ErrorCode::parse_error, "each row must be an array of integers");
    std::vector<std::int64_t>& row = rows.emplace_back();
    for (const json& x : r) {
      if (!x.is_number_integer() || (x.is_number_unsigned() && x.get<std::uint64_t>() > INT64_MAX)) {
        throw Error(ErrorCode::parse_error, "matrix entries must be 64-bit integers, got " + x.dump());
      }
      row.push_back(x.get<std::int64_t>());
    }
  }
  std::optional<std::vector<Parity>> parity;
  if (j.contains("parity") && !j["parity"].is_null()) {
    if (!j["parity"].is_string()) throw Error(ErrorCode::parse_error, "\"parity\" must be a string over {e,o,i}");
    std::vector<Parity>& p = parity.emplace();
    for (char c : j["parity"].get<std::string>()) p.push_back(parity_from_code(c));
  }
  return NamedMatrix{std::move(name), CartanMatrix::validate(rows, std::move(parity))};
}

json matrix_to_json(const CartanMatrix& m, const std::optional<std::string>& name) {
  json j = json::object();
  if (name) j["name"] = *name;
  j["parity"] = m.parity_string();
  j["rows"] = m.rows();
  return j;
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "permutation must be an array of 1-based indices");
  std::vector<std::int64_t> image;
  for (const json& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::parse_error, "permutation entries must be integers");
    image.push_back(x.get<std::int64_t>());
  }
  return Permutation::from_one_based(image);
}

json permutation_to_json(const Permutation& p) { return p.one_based(); }

json to_json(const TypeVerdict& v) {
  json comps = json::array();
  for (const ComponentVerdict& c : v.components) {
    json idx = json::array();
    for (std::size_t i : c.indices) idx.push_back(i + 1);
    comps.push_back(json{{"indices", std::move(idx)}, {"kind", std::string(to_string(c.kind))}});
  }
  return json{{"kind", std::string(to_string(v.kind))}, {"components", std::move(comps)}};
}

json to_json(const SuperizationReport& r) {
  json sups = json::array();
  for (const CartanMatrix& s : r.superizations) sups.push_back(matrix_to_json(s));
  return json{{"h", matrix_to_json(r.h)}, {"multiplicity", r.multiplicity()}, {"superizations", std::move(sups)}};
}

json to_json(const GramData& g) {
  json d = json::array();
  for (const Rational& x : g.d.d) d.push_back(to_string(x));
  return json{{"d", std::move(d)},
              {"b", rational_matrix_to_json(g.b)},
              {"cos2", rational_matrix_to_json(g.cos2)},
              {"signature",
               {{"positive", g.signature.positive}, {"negative", g.signature.negative}, {"zero", g.signature.zero}}}};
}

json to_json(const WallEmbedding& w) {
  return json{{"vectors", w.vectors}, {"tolerance", w.tolerance}, {"max_gram_error", w.max_gram_error}};
}

json to_json(const CensusReport& r) {
  json per_rank = json::object();
  for (const auto& [rank, counts] : r.per_rank) per_rank[std::to_string(rank)] = counts_to_json(counts);
  json pairs = json::array();
  for (const PairingClass& p : r.pairs) {
    json s = json::array();
    for (const CartanMatrix& m : p.superizations) s.push_back(matrix_to_json(m));
    pairs.push_back(json{{"h", matrix_to_json(p.h)},
                         {"symmetrizable", p.symmetrizable},
                         {"multiplicity", p.superizations.size()},
                         {"s", std::move(s)}});
  }
  return json{{"ranks", {r.first_rank, r.last_rank}},
              {"per_rank", std::move(per_rank)},
              {"totals", counts_to_json(r.totals)},
              {"bound_saturated", r.bound_saturated},
              {"pairs", std::move(pairs)}};
}

json to_json(const EntryReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  return json{{"s_name", r.s_name}, {"h_name", r.h_name}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

json to_json(const CatalogStats& s) {
  json mult = json::object();
  for (const MultiplicityClass& c : s.classes) mult[c.h_names.front()] = c.count();
  return json{{"entry_count", s.entry_count},
              {"distinct_h_count", s.distinct_h_count},
              {"multi_h_count", s.multi_h_count},
              {"multiplicity", std::move(mult)},
              {"multi_flag_mismatches", s.multi_flag_mismatches},
              {"name_conflicts", s.name_conflicts}};
}

}  // namespace cartan
