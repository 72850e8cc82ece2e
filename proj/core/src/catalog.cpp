#include "cartan/catalog.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "cartan/classify.hpp"
#include "cartan/equivalence.hpp"
#include "cartan/error.hpp"
#include "cartan/geometry.hpp"
#include "cartan/json_io.hpp"
#include "cartan/supermap.hpp"

namespace cartan {

std::string_view to_string(Section s) noexcept { return s == Section::sym ? "sym" : "nonsym"; }

namespace {

Section parse_section(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "sym") return Section::sym;
    if (s == "nonsym") return Section::nonsym;
  }
  throw Error(ErrorCode::parse_error, "\"section\" must be \"sym\" or \"nonsym\", got " + j.dump());
}

std::string required_string(const json& e, const char* key) {
  if (!e.contains(key) || !e[key].is_string()) {
    throw Error(ErrorCode::parse_error, std::string("missing string field \"") + key + "\"");
  }
  return e[key].get<std::string>();
}

CatalogEntry parse_entry(const json& e, Section section) {
  if (!e.is_object()) throw Error(ErrorCode::parse_error, "entry must be an object");
  for (const char* key : {"s", "h"})
    if (!e.contains(key)) throw Error(ErrorCode::parse_error, std::string("missing field \"") + key + "\"");
  CatalogEntry out{required_string(e, "s_name"), matrix_from_json(e["s"]).matrix, required_string(e, "h_name"),
                   matrix_from_json(e["h"]).matrix, std::nullopt, section, false};
  if (e.contains("section")) out.section = parse_section(e["section"]);
  if (e.contains("perm") && !e["perm"].is_null()) out.perm = permutation_from_json(e["perm"]);
  if (e.contains("multi")) {
    if (!e["multi"].is_boolean()) throw Error(ErrorCode::parse_error, "\"multi\" must be a boolean");
    out.multi = e["multi"].get<bool>();
  }
  if (!out.s.has_odd_non_isotropic() && !out.s.has_isotropic()) {
    throw Error(ErrorCode::validation_error, "super matrix has no odd index");
  }
  if (!out.h.is_even()) throw Error(ErrorCode::validation_error, "hyperbolic matrix has odd indices");
  if (out.s.rank() != out.h.rank()) throw Error(ErrorCode::validation_error, "matrices differ in rank");
  if (out.perm && out.perm->size() != out.s.rank()) {
    throw Error(ErrorCode::validation_error, "permutation size differs from the rank");
  }
  return out;
}

CheckResult run_check(std::string name, auto&& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    body(r);
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = ex.what();
  }
  return r;
}

}  // namespace

Catalog parse_catalog_text(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorCode::parse_error, std::string(source) + ": " + ex.what());
  }
  Catalog cat;
  const json* entries = &doc;
  if (doc.is_object()) {
    if (doc.contains("section")) cat.section = parse_section(doc["section"]);
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
      throw Error(ErrorCode::parse_error, std::string(source) + ": missing \"entries\" array");
    }
    entries = &doc["entries"];
  } else if (!doc.is_array()) {
    throw Error(ErrorCode::parse_error, std::string(source) + ": catalog must be an object or an array");
  }
  std::size_t index = 0;
  for (const json& e : *entries) {
    ++index;
    try {
      cat.entries.push_back(parse_entry(e, cat.section));
    } catch (const Error& ex) {
      std::ostringstream os;
      os << source << ": entry #" << index;
      if (e.is_object() && e.contains("s_name") && e["s_name"].is_string()) {
        os << " (" << e["s_name"].get<std::string>() << ")";
      }
      os << ": " << ex.what();
      throw Error(ex.code() == ErrorCode::parse_error ? ErrorCode::parse_error : ErrorCode::validation_error,
                  os.str());
    }
  }
  return cat;
}

Catalog parse_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog_text(buf.str(), path.string());
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("CARTAN_CATALOG_DIR"); env != nullptr && *env != '\0') return env;
  const std::filesystem::path source = CARTAN_SOURCE_DATA_DIR;
  if (std::filesystem::exists(source / "catalog_sym.json")) return source;
  return CARTAN_INSTALLED_DATA_DIR;
}

Catalog load_bundled_catalog(Section section) {
  return parse_catalog(default_catalog_dir() /
                       (section == Section::sym ? "catalog_sym.json" : "catalog_nonsym.json"));
}

bool EntryReport::passed() const noexcept {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

EntryReport verify_entry(const CatalogEntry& e) {
  EntryReport report{e.s_name, e.h_name, {}};
  const Permutation sigma = e.perm ? *e.perm : Permutation::identity(e.s.rank());

  report.checks.push_back(run_check("pair", [&](CheckResult& r) {
    r.passed = verify_pair(e.s, e.h, sigma);
    if (!r.passed) {
      r.detail = verify_pair(e.s, e.h, sigma.inverse())
                     ? "only the inverse permutation relates the matrices"
                     : "h(sigma(i), sigma(j)) differs from the desuperized s(i, j)";
    }
  }));
  report.checks.push_back(run_check("s_almost_affine", [&](CheckResult& r) {
    const TypeVerdict v = classify_super(e.s);
    r.passed = v.kind == VerdictKind::almost_affine;
    if (!r.passed) r.detail = "classified " + std::string(to_string(v.kind));
  }));
  report.checks.push_back(run_check("h_almost_affine", [&](CheckResult& r) {
    const TypeVerdict v = type_of(e.h);
    r.passed = v.kind == VerdictKind::almost_affine;
    if (!r.passed) r.detail = "classified " + std::string(to_string(v.kind));
  }));
  report.checks.push_back(run_check("symmetrizability", [&](CheckResult& r) {
    const bool want = e.section == Section::sym;
    const bool s_sym = is_symmetrizable(e.s);
    const bool h_sym = is_symmetrizable(e.h);
    r.passed = s_sym == want && h_sym == want;
    if (!r.passed) {
      r.detail = std::string("s ") + (s_sym ? "is" : "is not") + " symmetrizable, h " +
                 (h_sym ? "is" : "is not") + "; section " + std::string(to_string(e.section));
    }
  }));
  if (e.section == Section::sym) {
    report.checks.push_back(run_check("billiard", [&](CheckResult& r) {
      r.passed = billiard_compare(e.s, e.h, sigma);
      if (!r.passed) r.detail = "wall angles or signature differ";
    }));
  }
  return report;
}

std::vector<EntryReport> verify_catalog(std::span<const CatalogEntry> entries, unsigned jobs) {
  std::vector<EntryReport> out(entries.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) out[i] = verify_entry(entries[i]);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
  }
  return out;
}

std::map<std::string, std::size_t> CatalogStats::multiplicity_map() const {
  std::map<std::string, std::size_t> out;
  for (const MultiplicityClass& c : classes) out[c.h_names.front()] = c.count();
  return out;
}

CatalogStats stats(std::span<const CatalogEntry> entries) {
  CatalogStats st;
  st.entry_count = entries.size();
  std::map<CartanMatrix, std::size_t> index;
  std::vector<std::size_t> class_of(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    CartanMatrix key = canonical_form(e.h).matrix;
    auto [it, inserted] = index.try_emplace(key, st.classes.size());
    if (inserted) st.classes.push_back(MultiplicityClass{std::move(key), {}, {}});
    MultiplicityClass& c = st.classes[it->second];
    if (std::find(c.h_names.begin(), c.h_names.end(), e.h_name) == c.h_names.end()) c.h_names.push_back(e.h_name);
    c.s_names.push_back(e.s_name);
    class_of[i] = it->second;
  }
  st.distinct_h_count = st.classes.size();
  for (const MultiplicityClass& c : st.classes) {
    if (c.count() >= 2) ++st.multi_h_count;
    if (c.h_names.size() > 1) {
      std::string joined;
      for (const auto& n : c.h_names) joined += (joined.empty() ? "" : " = ") + n;
      st.name_conflicts.push_back(joined);
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].multi != (st.classes[class_of[i]].count() >= 2)) {
      st.multi_flag_mismatches.push_back(entries[i].s_name);
    }
  }
  return st;
}

}  // namespace cartan
