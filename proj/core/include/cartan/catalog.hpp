#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cartan/cartan_matrix.hpp"
#include "cartan/permutation.hpp"

namespace cartan {

enum class Section { sym, nonsym };

std::string_view to_string(Section s) noexcept;

/// One published pairing: a super matrix, its hyperbolic desuperization and
/// the relabelling between them.
struct CatalogEntry {
  std::string s_name;
  CartanMatrix s;
  std::string h_name;
  CartanMatrix h;
  std::optional<Permutation> perm;  // nullopt = identity
  Section section = Section::sym;
  bool multi = false;               // flagged as one of several superizations
};

struct Catalog {
  Section section = Section::sym;
  std::vector<CatalogEntry> entries;
};

/// Accepts {"section": ..., "entries": [...]} or a bare array of entries.
/// Throws parse_error (bad JSON, with line context) or validation_error
/// (naming the entry).
Catalog parse_catalog(const std::filesystem::path& path);
Catalog parse_catalog_text(std::string_view text, std::string_view source = "<memory>");

/// Directory holding catalog_sym.json and catalog_nonsym.json.
/// CARTAN_CATALOG_DIR wins; otherwise the source tree, then the install
/// prefix.
std::filesystem::path default_catalog_dir();
Catalog load_bundled_catalog(Section section);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EntryReport {
  std::string s_name;
  std::string h_name;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

/// Runs every check and records the outcome; never throws for a failing
/// check. Checks: pair, s_almost_affine, h_almost_affine, symmetrizability,
/// billiard (sym entries only).
EntryReport verify_entry(const CatalogEntry& e);

std::vector<EntryReport> verify_catalog(std::span<const CatalogEntry> entries, unsigned jobs = 1);

struct MultiplicityClass {
  CartanMatrix h_canonical;
  std::vector<std::string> h_names;  // distinct names seen for this class
  std::vector<std::string> s_names;

  std::size_t count() const noexcept { return s_names.size(); }
};

struct CatalogStats {
  std::size_t entry_count = 0;
  std::size_t distinct_h_count = 0;
  std::size_t multi_h_count = 0;
  /// One per distinct H-class, in order of first appearance.
  std::vector<MultiplicityClass> classes;
  /// Entries whose multi flag disagrees with multiplicity >= 2.
  std::vector<std::string> multi_flag_mismatches;
  /// H-classes that appear under more than one name.
  std::vector<std::string> name_conflicts;

  /// First h_name of each class -> multiplicity.
  std::map<std::string, std::size_t> multiplicity_map() const;
};

CatalogStats stats(std::span<const CatalogEntry> entries);

}  // namespace cartan
