#include "cartan/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cartan/catalog.hpp"
#include "cartan/census_targets.hpp"
#include "cartan/classify.hpp"
#include "cartan/enumeration.hpp"
#include "cartan/equivalence.hpp"
#include "cartan/error.hpp"
#include "cartan/geometry.hpp"
#include "cartan/json_io.hpp"
#include "cartan/supermap.hpp"

namespace cartan::cli {
namespace {

constexpr const char* matrix_schema =
    "Matrix JSON: {\"name\": optional string, \"parity\": optional string over e/o/i,\n"
    "              \"rows\": [[int, ...], ...]}\n"
    "A missing parity is read off the diagonal (2 -> e, 1 -> o, 0 -> i).";

constexpr const char* exit_codes = "Exit status: 0 success, 1 verification or census mismatch, 2 usage or input error.";

std::string footer(std::initializer_list<std::string_view> parts) {
  std::string s;
  for (std::string_view p : parts) {
    if (!s.empty()) s += "\n\n";
    s += p;
  }
  return s;
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
}

/// A single matrix object or an array of them.
std::vector<NamedMatrix> read_matrices(const std::string& path) {
  const json j = read_json(path);
  std::vector<NamedMatrix> out;
  if (j.is_array()) {
    for (const json& m : j) out.push_back(matrix_from_json(m));
  } else {
    out.push_back(matrix_from_json(j));
  }
  return out;
}

NamedMatrix read_one_matrix(const std::string& path) {
  const json j = read_json(path);
  if (j.is_array()) throw Error(ErrorCode::parse_error, path + ": expected one matrix object, got an array");
  return matrix_from_json(j);
}

std::string rows_text(const CartanMatrix& m) { return json(m.rows()).dump(); }

std::string display_name(const NamedMatrix& m, std::size_t index) {
  return m.name ? *m.name : "#" + std::to_string(index + 1);
}

std::string latex_matrix(const CartanMatrix& m) {
  std::ostringstream s;
  s << "\\begin{smallmatrix}";
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (i) s << "\\\\";
    for (std::size_t j = 0; j < m.rank(); ++j) s << (j ? "&" : "") << m(i, j);
  }
  s << "\\end{smallmatrix}";
  return s.str();
}

std::string csv_rows(const CartanMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < m.rank(); ++j) {
      if (j) s += ' ';
      s += std::to_string(m(i, j));
    }
  }
  return s;
}

std::string index_set_text(const IndexSet& s) {
  std::string t = "{";
  for (std::size_t k = 0; k < s.size(); ++k) t += (k ? "," : "") + std::to_string(s[k] + 1);
  return t + "}";
}

void print_rational_matrix(std::ostream& out, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
}

SymmetrizableFilter parse_filter(const std::string& s) {
  if (s == "sym") return SymmetrizableFilter::only_symmetrizable;
  if (s == "nonsym") return SymmetrizableFilter::only_nonsymmetrizable;
  return SymmetrizableFilter::all;
}

std::pair<int, int> parse_rank_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int r = std::stoi(text);
      return {r, r};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::validation_error, "rank range must look like 3..10, got \"" + text + "\"");
  }
}

// ---- classify -------------------------------------------------------------

struct ClassifyArgs {
  std::string input;
  std::string format = "json";
};

int run_classify(const ClassifyArgs& a, std::ostream& out) {
  const auto matrices = read_matrices(a.input);
  json all = json::array();
  if (a.format == "csv") out << "name,rank,parity,kind\n";
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const NamedMatrix& m = matrices[k];
    const TypeVerdict v = m.matrix.is_even() ? type_of(m.matrix) : classify_super(m.matrix);
    const std::string name = display_name(m, k);
    if (a.format == "json") {
      json j = json::object();
      if (m.name) j["name"] = *m.name;
      j.update(to_json(v));
      all.push_back(std::move(j));
    } else if (a.format == "csv") {
      out << name << ',' << m.matrix.rank() << ',' << m.matrix.parity_string() << ',' << to_string(v.kind) << '\n';
    } else {
      out << name << ": " << to_string(v.kind) << '\n';
      for (const ComponentVerdict& c : v.components) {
        out << "  component " << index_set_text(c.indices) << ": " << to_string(c.kind) << '\n';
      }
    }
  }
  if (a.format == "json") out << (matrices.size() == 1 ? all.front() : all).dump(2) << '\n';
  return exit_ok;
}

// ---- desuperize -----------------------------------------------------------

struct DesuperizeArgs {
  std::string input;
  std::string format = "json";
};

int run_desuperize(const DesuperizeArgs& a, std::ostream& out) {
  const auto matrices = read_matrices(a.input);
  json all = json::array();
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const CartanMatrix d = desuperize(matrices[k].matrix);
    if (a.format == "json") {
      all.push_back(matrix_to_json(d, matrices[k].name));
    } else {
      out << display_name(matrices[k], k) << ": " << rows_text(d) << '\n';
    }
  }
  if (a.format == "json") out << (matrices.size() == 1 ? all.front() : all).dump(2) << '\n';
  return exit_ok;
}

// ---- superize -------------------------------------------------------------

struct SuperizeArgs {
  std::string input;
  bool relax = false;
  std::string format = "json";
};

int run_superize(const SuperizeArgs& a, std::ostream& out) {
  const NamedMatrix h = read_one_matrix(a.input);
  const SuperizationReport r = find_superizations(h.matrix, SuperizeOptions{.require_almost_affine = !a.relax});
  if (a.format == "json") {
    json j = to_json(r);
    if (h.name) j["h"]["name"] = *h.name;
    out << j.dump(2) << '\n';
  } else {
    out << (h.name ? *h.name : std::string("input")) << ": " << r.multiplicity() << " superization"
        << (r.multiplicity() == 1 ? "" : "s") << '\n';
    for (const CartanMatrix& s : r.superizations) out << "  " << s.parity_string() << "  " << rows_text(s) << '\n';
  }
  return exit_ok;
}

// ---- equivalent -----------------------------------------------------------

struct EquivalentArgs {
  std::string first;
  std::string second;
  std::string format = "json";
};

int run_equivalent(const EquivalentArgs& a, std::ostream& out) {
  const NamedMatrix m1 = read_one_matrix(a.first);
  const NamedMatrix m2 = read_one_matrix(a.second);
  const std::optional<Permutation> sigma = are_equivalent(m1.matrix, m2.matrix);
  if (a.format == "json") {
    json j{{"equivalent", sigma.has_value()}, {"sigma", sigma ? permutation_to_json(*sigma) : json(nullptr)}};
    out << j.dump(2) << '\n';
  } else if (sigma) {
    out << "equivalent, sigma = " << permutation_to_json(*sigma).dump() << '\n';
  } else {
    out << "not equivalent\n";
  }
  return sigma ? exit_ok : exit_mismatch;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  std::optional<int> rank;
  std::string ranks;
  bool super = false;
  std::string sym = "all";
  int max_entry = 4;
  unsigned jobs = 1;
  std::string format = "json";
};

int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
  if (a.rank && !a.ranks.empty()) throw Error(ErrorCode::validation_error, "give either --rank or --ranks");
  auto [first, last] = a.rank ? std::pair{*a.rank, *a.rank}
                              : parse_rank_range(a.ranks.empty() ? "3..10" : a.ranks);
  if (first > last) throw Error(ErrorCode::validation_error, "empty rank range");

  std::map<int, std::vector<CartanMatrix>> found;
  bool saturated = false;
  for (int r = first; r <= last; ++r) {
    EnumerationOptions opts{
        .rank = r, .super = a.super, .filter = parse_filter(a.sym), .max_abs_offdiag = a.max_entry, .jobs = a.jobs};
    found[r] = a.super ? enumerate_super_almost_affine(opts) : enumerate_hyperbolic(opts);
    if (!a.super) saturated = saturated || bound_saturated(found[r], a.max_entry);
  }
  std::size_t total = 0;
  for (const auto& [r, ms] : found) total += ms.size();

  if (a.format == "json") {
    json per_rank = json::object();
    json matrices = json::array();
    for (const auto& [r, ms] : found) {
      per_rank[std::to_string(r)] = ms.size();
      for (const CartanMatrix& m : ms) matrices.push_back(matrix_to_json(m));
    }
    json j{{"ranks", {first, last}}, {"super", a.super},       {"sym", a.sym},
           {"max_entry", a.max_entry}, {"per_rank", per_rank}, {"total", total}};
    if (!a.super) j["bound_saturated"] = saturated;
    j["matrices"] = std::move(matrices);
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "rank,index,parity,symmetrizable,rows\n";
    for (const auto& [r, ms] : found) {
      for (std::size_t k = 0; k < ms.size(); ++k) {
        out << r << ',' << k + 1 << ',' << ms[k].parity_string() << ',' << (is_symmetrizable(ms[k]) ? 1 : 0) << ','
            << csv_rows(ms[k]) << '\n';
      }
    }
  } else if (a.format == "latex") {
    out << "\\begin{longtable}{rrl}\n\\hline\nrank & \\# & matrix \\\\\n\\hline\n";
    for (const auto& [r, ms] : found) {
      for (std::size_t k = 0; k < ms.size(); ++k) {
        out << r << " & " << k + 1 << " & $\\left(" << latex_matrix(ms[k]) << "\\right)$ \\\\\n";
      }
    }
    out << "\\hline\n\\end{longtable}\n";
  } else {
    for (const auto& [r, ms] : found) {
      out << "rank " << r << ": " << ms.size() << " classes\n";
      for (const CartanMatrix& m : ms) out << "  " << m.parity_string() << "  " << rows_text(m) << '\n';
    }
    out << "total: " << total << '\n';
    if (!a.super && saturated) out << "warning: entry bound is saturated, raise --max-entry\n";
  }
  return exit_ok;
}

// ---- verify-catalog -------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::string section = "sym";
  unsigned jobs = 1;
  bool with_stats = false;
  std::string format = "text";
};

void print_stats_text(std::ostream& out, const CatalogStats& s) {
  out << "entries: " << s.entry_count << "\ndistinct H-classes: " << s.distinct_h_count
      << "\nmulti-superization classes: " << s.multi_h_count << '\n';
  for (const MultiplicityClass& c : s.classes) {
    if (c.count() < 2) continue;
    out << "  " << c.h_names.front() << " -> " << c.count() << " (";
    for (std::size_t k = 0; k < c.s_names.size(); ++k) out << (k ? ", " : "") << c.s_names[k];
    out << ")\n";
  }
  for (const std::string& m : s.multi_flag_mismatches) out << "multi flag mismatch: " << m << '\n';
  for (const std::string& m : s.name_conflicts) out << "H-class under several names: " << m << '\n';
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const Catalog cat =
      a.path.empty() ? load_bundled_catalog(a.section == "nonsym" ? Section::nonsym : Section::sym) : parse_catalog(a.path);
  const auto reports = verify_catalog(cat.entries, a.jobs);
  std::size_t passed = 0;
  for (const EntryReport& r : reports) passed += r.passed() ? 1 : 0;
  std::optional<CatalogStats> st;
  if (a.with_stats) st = stats(cat.entries);
  const bool ok = passed == reports.size() && (!st || (st->multi_flag_mismatches.empty() && st->name_conflicts.empty()));

  if (a.format == "json") {
    json entries = json::array();
    for (const EntryReport& r : reports) entries.push_back(to_json(r));
    json j{{"section", std::string(to_string(cat.section))},
           {"entries", reports.size()},
           {"passed", passed},
           {"ok", ok},
           {"reports", std::move(entries)}};
    if (st) j["stats"] = to_json(*st);
    out << j.dump(2) << '\n';
  } else if (a.format == "latex") {
    out << "\\begin{longtable}{llll}\n\\hline\n$S$ & $H$ & result & failed checks \\\\\n\\hline\n";
    for (const EntryReport& r : reports) {
      std::string failed;
      for (const CheckResult& c : r.checks) {
        if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
      }
      out << r.s_name << " & " << r.h_name << " & " << (r.passed() ? "pass" : "FAIL") << " & " << failed << " \\\\\n";
    }
    out << "\\hline\n\\end{longtable}\n";
  } else {
    for (const EntryReport& r : reports) {
      out << r.s_name << '\t' << r.h_name << '\t' << (r.passed() ? "pass" : "FAIL") << '\n';
      for (const CheckResult& c : r.checks) {
        if (!c.passed || !c.detail.empty()) {
          out << "    " << c.name << ": " << (c.passed ? "pass" : "FAIL");
          if (!c.detail.empty()) out << " (" << c.detail << ')';
          out << '\n';
        }
      }
    }
    out << passed << '/' << reports.size() << " entries pass\n";
    if (st) print_stats_text(out, *st);
  }
  return ok ? exit_ok : exit_mismatch;
}

// ---- geometry -------------------------------------------------------------

struct GeometryArgs {
  std::string input;
  bool embed = false;
  double tolerance = default_embedding_tolerance;
  std::string format = "json";
};

int run_geometry(const GeometryArgs& a, std::ostream& out) {
  const NamedMatrix m = read_one_matrix(a.input);
  const GramData g = gram_data(m.matrix);
  std::optional<WallEmbedding> w;
  if (a.embed) w = lorentz_embedding(g.b, a.tolerance);
  if (a.format == "json") {
    json j = json::object();
    if (m.name) j["name"] = *m.name;
    j.update(to_json(g));
    j["lorentzian"] = g.signature.is_lorentzian();
    if (w) j["embedding"] = to_json(*w);
    out << j.dump(2) << '\n';
  } else {
    out << "d:";
    for (const Rational& x : g.d.d) out << ' ' << to_string(x);
    out << "\nB = diag(d) A:\n";
    print_rational_matrix(out, g.b);
    out << "cos2:\n";
    print_rational_matrix(out, g.cos2);
    out << "signature: (" << g.signature.positive << ", " << g.signature.negative << ", " << g.signature.zero << ")"
        << (g.signature.is_lorentzian() ? " lorentzian" : "") << '\n';
    if (w) {
      out << "embedding (last coordinate timelike), max Gram error " << w->max_gram_error << ":\n";
      for (const auto& v : w->vectors) {
        out << " ";
        for (double x : v) out << ' ' << x;
        out << '\n';
      }
    }
  }
  return exit_ok;
}

// ---- census ---------------------------------------------------------------

struct CensusArgs {
  unsigned jobs = 1;
  int max_entry = 4;
  bool no_catalog = false;
  std::string format = "text";
};

struct TargetCheck {
  std::string name;
  std::size_t expected;
  std::size_t actual;
};

struct ClassDiff {
  std::string what;
  // rank -> rows of the enumeration absent from the catalog / catalog names
  // absent from the enumeration
  std::map<std::size_t, std::vector<CartanMatrix>> extra;
  std::map<std::size_t, std::vector<std::string>> missing;

  bool empty() const { return extra.empty() && missing.empty(); }
};

ClassDiff diff_classes(std::string what, const std::vector<CartanMatrix>& enumerated,
                       const std::vector<std::pair<std::string, CartanMatrix>>& catalog) {
  ClassDiff d{std::move(what), {}, {}};
  std::set<CartanMatrix> seen(enumerated.begin(), enumerated.end());
  std::set<CartanMatrix> listed;
  for (const auto& [name, m] : catalog) {
    CartanMatrix c = canonical_form(m).matrix;
    if (!seen.contains(c)) d.missing[m.rank()].push_back(name);
    listed.insert(std::move(c));
  }
  for (const CartanMatrix& m : enumerated) {
    if (!listed.contains(m)) d.extra[m.rank()].push_back(m);
  }
  return d;
}

std::vector<ClassDiff> catalog_diffs(const CensusReport& r) {
  std::vector<ClassDiff> out;
  for (Section sec : {Section::sym, Section::nonsym}) {
    const bool sym = sec == Section::sym;
    const Catalog cat = load_bundled_catalog(sec);
    std::vector<CartanMatrix> hs;
    std::vector<CartanMatrix> ss;
    for (const PairingClass& p : r.pairs) {
      if (p.symmetrizable != sym) continue;
      hs.push_back(p.h);
      ss.insert(ss.end(), p.superizations.begin(), p.superizations.end());
    }
    std::vector<std::pair<std::string, CartanMatrix>> ch;
    std::vector<std::pair<std::string, CartanMatrix>> cs;
    for (const CatalogEntry& e : cat.entries) {
      ch.emplace_back(e.h_name, e.h);
      cs.emplace_back(e.s_name, e.s);
    }
    const std::string tag(to_string(sec));
    out.push_back(diff_classes("superizable H-classes (" + tag + ")", hs, ch));
    out.push_back(diff_classes("super classes (" + tag + ")", ss, cs));
  }
  return out;
}

std::vector<TargetCheck> target_checks(const CensusReport& r) {
  const RankCounts& t = r.totals;
  std::vector<TargetCheck> checks{
      {"hyperbolic_sym", targets::hyperbolic_sym, t.hyperbolic_sym},
      {"hyperbolic_nonsym", targets::hyperbolic_nonsym, t.hyperbolic_nonsym},
      {"hyperbolic_total", targets::hyperbolic_total, t.hyperbolic_sym + t.hyperbolic_nonsym},
      {"superizable_sym", targets::superizable_sym, t.superizable_sym},
      {"superizable_nonsym", targets::superizable_nonsym, t.superizable_nonsym},
      {"multi_superizable_sym", targets::multi_superizable_sym, t.multi_superizable_sym},
      {"multi_superizable_nonsym", targets::multi_superizable_nonsym, t.multi_superizable_nonsym},
      {"super_sym", targets::super_sym, t.super_sym},
      {"super_nonsym", targets::super_nonsym, t.super_nonsym},
  };
  for (bool sym : {true, false}) {
    std::map<std::size_t, std::size_t> want;
    if (sym) {
      for (const auto& [name, k] : targets::multi_sym) ++want[k];
    } else {
      for (const auto& [name, k] : targets::multi_nonsym) ++want[k];
    }
    const auto got = r.multiplicity_histogram(sym);
    std::set<std::size_t> keys;
    for (const auto& [k, n] : want) keys.insert(k);
    for (const auto& [k, n] : got) {
      if (k >= 2) keys.insert(k);
    }
    for (std::size_t k : keys) {
      const auto w = want.find(k);
      const auto g = got.find(k);
      checks.push_back({std::string(sym ? "sym" : "nonsym") + "_classes_with_multiplicity_" + std::to_string(k),
                        w == want.end() ? 0 : w->second, g == got.end() ? 0 : g->second});
    }
  }
  return checks;
}

constexpr std::array<std::pair<const char*, std::size_t RankCounts::*>, 8> count_columns{{
    {"hyperbolic_sym", &RankCounts::hyperbolic_sym},
    {"hyperbolic_nonsym", &RankCounts::hyperbolic_nonsym},
    {"superizable_sym", &RankCounts::superizable_sym},
    {"superizable_nonsym", &RankCounts::superizable_nonsym},
    {"multi_superizable_sym", &RankCounts::multi_superizable_sym},
    {"multi_superizable_nonsym", &RankCounts::multi_superizable_nonsym},
    {"super_sym", &RankCounts::super_sym},
    {"super_nonsym", &RankCounts::super_nonsym},
}};

int run_census(const CensusArgs& a, std::ostream& out, std::ostream& err) {
  const CensusReport r =
      pairing_report(min_census_rank, max_census_rank, SymmetrizableFilter::all, a.max_entry, a.jobs);
  const auto checks = target_checks(r);
  bool ok = !r.bound_saturated;
  for (const TargetCheck& c : checks) ok = ok && c.expected == c.actual;

  std::vector<ClassDiff> diffs;
  if (!a.no_catalog) {
    try {
      diffs = catalog_diffs(r);
    } catch (const Error& e) {
      err << "warning: catalog cross-check skipped: " << e.what() << '\n';
    }
  }
  for (const ClassDiff& d : diffs) ok = ok && d.empty();

  if (a.format == "json") {
    json j = to_json(r);
    json tj = json::array();
    for (const TargetCheck& c : checks) {
      tj.push_back(json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.expected == c.actual}});
    }
    j["targets"] = std::move(tj);
    json dj = json::array();
    for (const ClassDiff& d : diffs) {
      json extra = json::object();
      json missing = json::object();
      for (const auto& [rank, ms] : d.extra) {
        json arr = json::array();
        for (const CartanMatrix& m : ms) arr.push_back(matrix_to_json(m));
        extra[std::to_string(rank)] = std::move(arr);
      }
      for (const auto& [rank, names] : d.missing) missing[std::to_string(rank)] = names;
      dj.push_back(json{{"what", d.what}, {"extra", std::move(extra)}, {"missing", std::move(missing)}});
    }
    j["catalog_diff"] = std::move(dj);
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "rank";
    for (const auto& [name, field] : count_columns) out << ',' << name;
    out << '\n';
    for (const auto& [rank, c] : r.per_rank) {
      out << rank;
      for (const auto& [name, field] : count_columns) out << ',' << c.*field;
      out << '\n';
    }
    out << "total";
    for (const auto& [name, field] : count_columns) out << ',' << r.totals.*field;
    out << '\n';
  } else if (a.format == "latex") {
    out << "\\begin{tabular}{r|rr|rr|rr|rr}\n\\hline\n"
           "rank & hyp & nonsym & sup. & nonsym & multi & nonsym & $S$ & nonsym \\\\\n\\hline\n";
    auto row = [&](const std::string& label, const RankCounts& c) {
      out << label;
      for (const auto& [name, field] : count_columns) out << " & " << c.*field;
      out << " \\\\\n";
    };
    for (const auto& [rank, c] : r.per_rank) row(std::to_string(rank), c);
    out << "\\hline\n";
    row("total", r.totals);
    out << "\\hline\n\\end{tabular}\n";
  } else {
    out << "rank  hyp(sym+nonsym)  superizable  multi  super\n";
    auto row = [&](const std::string& label, const RankCounts& c) {
      out << label << "  " << c.hyperbolic_sym << '+' << c.hyperbolic_nonsym << "  " << c.superizable_sym << '+'
          << c.superizable_nonsym << "  " << c.multi_superizable_sym << '+' << c.multi_superizable_nonsym << "  "
          << c.super_sym << '+' << c.super_nonsym << '\n';
    };
    for (const auto& [rank, c] : r.per_rank) row(std::to_string(rank), c);
    row("total", r.totals);
    for (const TargetCheck& c : checks) {
      out << (c.expected == c.actual ? "ok       " : "MISMATCH ") << c.name << ": " << c.actual << " (expected "
          << c.expected << ")\n";
    }
    if (r.bound_saturated) out << "MISMATCH entry bound saturated; raise --max-entry\n";
    for (const ClassDiff& d : diffs) {
      if (d.empty()) {
        out << "ok       catalog agrees on " << d.what << '\n';
        continue;
      }
      out << "MISMATCH catalog disagrees on " << d.what << '\n';
      for (const auto& [rank, ms] : d.extra) {
        for (const CartanMatrix& m : ms) out << "  rank " << rank << " extra " << m.parity_string() << ' ' << rows_text(m) << '\n';
      }
      for (const auto& [rank, names] : d.missing) {
        for (const std::string& n : names) out << "  rank " << rank << " missing " << n << '\n';
      }
    }
    out << (ok ? "census matches\n" : "census MISMATCH\n");
  }
  return ok ? exit_ok : exit_mismatch;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic Cartan matrices and their superizations", "cartan"};
  app.require_subcommand(1);
  app.footer(exit_codes);
  const std::vector<std::string> json_text{"json", "text"};

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Finite / affine / almost affine / other indefinite verdict");
  c->add_option("--input,-i", classify.input, "Matrix JSON file, or - for stdin; may hold an array")->required();
  c->add_option("--format", classify.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  c->footer(footer({matrix_schema,
                    "Output JSON: {\"name\", \"kind\": finite|affine|almost_affine|other_indefinite,\n"
                    "              \"components\": [{\"indices\": [1-based], \"kind\": finite|affine|indefinite}]}\n"
                    "Super matrices are classified through their desuperization.",
                    exit_codes}));

  DesuperizeArgs desup;
  auto* d = app.add_subcommand("desuperize", "Double every row with diagonal 1");
  d->add_option("--input,-i", desup.input, "Matrix JSON file, or - for stdin; may hold an array")->required();
  d->add_option("--format", desup.format, "Output format")->check(CLI::IsMember(json_text));
  d->footer(footer({matrix_schema, "Output: the desuperized matrix object.", exit_codes}));

  SuperizeArgs sup;
  auto* s = app.add_subcommand("superize", "All super matrices whose desuperization is the given matrix");
  s->add_option("--input,-i", sup.input, "Even almost affine matrix JSON")->required();
  s->add_flag("--relax", sup.relax, "Accept any even matrix and skip the almost affine filter");
  s->add_option("--format", sup.format, "Output format")->check(CLI::IsMember(json_text));
  s->footer(footer({matrix_schema,
                    "Output JSON: {\"h\": matrix, \"multiplicity\": k, \"superizations\": [matrix, ...]}\n"
                    "Superizations are canonical forms, pairwise inequivalent under permutations.",
                    exit_codes}));

  EquivalentArgs eq;
  auto* e = app.add_subcommand("equivalent", "Permutation equivalence test with witness");
  e->add_option("first", eq.first, "First matrix JSON")->required();
  e->add_option("second", eq.second, "Second matrix JSON")->required();
  e->add_option("--format", eq.format, "Output format")->check(CLI::IsMember(json_text));
  e->footer(footer({matrix_schema,
                    "Output JSON: {\"equivalent\": bool, \"sigma\": [1-based] | null} with\n"
                    "second[sigma(i)][sigma(j)] = first[i][j].",
                    "Exit status: 0 equivalent, 1 not equivalent, 2 usage or input error."}));

  EnumerateArgs en;
  auto* n = app.add_subcommand("enumerate", "Enumerate hyperbolic (or super almost affine) classes");
  auto* rank_opt = n->add_option("--rank", en.rank, "Single rank");
  auto* ranks_opt = n->add_option("--ranks", en.ranks, "Rank range A..B (default 3..10)");
  rank_opt->excludes(ranks_opt);
  n->add_flag("--super", en.super, "Enumerate super matrices obtained by superization");
  n->add_option("--sym", en.sym, "Symmetrizability filter")->check(CLI::IsMember({"all", "sym", "nonsym"}));
  n->add_option("--max-entry", en.max_entry, "Bound on |a_ij|")->check(CLI::PositiveNumber);
  n->add_option("--jobs,-j", en.jobs, "Worker threads")->check(CLI::PositiveNumber);
  n->add_option("--format", en.format, "Output format")->check(CLI::IsMember({"json", "text", "csv", "latex"}));
  n->footer(footer({"Output JSON: {\"ranks\": [a, b], \"super\", \"sym\", \"max_entry\",\n"
                    "              \"per_rank\": {\"3\": k3, ...}, \"total\", \"bound_saturated\",\n"
                    "              \"matrices\": [matrix, ...]}\n"
                    "Matrices are canonical forms in rank order; output does not depend on --jobs.",
                    exit_codes}));

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify-catalog", "Replay every pairing of a catalog file");
  v->add_option("catalog", ver.path, "Catalog JSON (default: bundled catalog of --section)");
  v->add_option("--section", ver.section, "Bundled catalog to use")->check(CLI::IsMember({"sym", "nonsym"}));
  v->add_flag("--stats", ver.with_stats, "Also report H-class multiplicities");
  v->add_option("--jobs,-j", ver.jobs, "Worker threads")->check(CLI::PositiveNumber);
  v->add_option("--format", ver.format, "Output format")->check(CLI::IsMember({"json", "text", "latex"}));
  v->footer(footer({"Catalog JSON: {\"section\": \"sym\"|\"nonsym\", \"entries\": [{\"s_name\", \"s\": matrix,\n"
                    "              \"h_name\", \"h\": matrix, \"perm\": [1-based] | null, \"multi\": bool}]}\n"
                    "The bundled catalogs are looked up in $CARTAN_CATALOG_DIR first.",
                    "Checks: pair, s_almost_affine, h_almost_affine, symmetrizability, billiard (sym only).",
                    exit_codes}));

  GeometryArgs geo;
  auto* g = app.add_subcommand("geometry", "Symmetrizer, Gram matrix, wall angles and signature");
  g->add_option("--input,-i", geo.input, "Symmetrizable matrix JSON")->required();
  g->add_flag("--embed", geo.embed, "Realize the simple roots in Minkowski space");
  g->add_option("--tolerance", geo.tolerance, "Allowed Gram reconstruction error")->check(CLI::PositiveNumber);
  g->add_option("--format", geo.format, "Output format")->check(CLI::IsMember(json_text));
  g->footer(footer({matrix_schema,
                    "Output JSON: {\"d\": [fraction], \"b\": [[fraction]], \"cos2\": [[fraction]],\n"
                    "              \"signature\": {\"positive\", \"negative\", \"zero\"}, \"lorentzian\",\n"
                    "              \"embedding\": {\"vectors\": [[float]], \"tolerance\", \"max_gram_error\"}}\n"
                    "Fractions are exact strings such as \"-1/4\"; the last coordinate is timelike.",
                    exit_codes}));

  CensusArgs cen;
  auto* k = app.add_subcommand("census", "Enumerate ranks 3..10 and compare with the published counts");
  k->add_option("--jobs,-j", cen.jobs, "Worker threads")->check(CLI::PositiveNumber);
  k->add_option("--max-entry", cen.max_entry, "Bound on |a_ij|")->check(CLI::PositiveNumber);
  k->add_flag("--no-catalog", cen.no_catalog, "Skip the class-by-class comparison with the bundled catalogs");
  k->add_option("--format", cen.format, "Output format")->check(CLI::IsMember({"json", "text", "csv", "latex"}));
  k->footer(footer({"Output JSON: {\"ranks\", \"per_rank\": {\"3\": {counts}, ...}, \"totals\": {counts},\n"
                    "              \"bound_saturated\", \"pairs\": [{\"h\", \"symmetrizable\", \"multiplicity\", \"s\"}],\n"
                    "              \"targets\": [{\"name\", \"expected\", \"actual\", \"ok\"}],\n"
                    "              \"catalog_diff\": [{\"what\", \"extra\": {rank: [matrix]}, \"missing\": {rank: [name]}}],\n"
                    "              \"ok\"}",
                    exit_codes}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (c->parsed()) return run_classify(classify, out);
    if (d->parsed()) return run_desuperize(desup, out);
    if (s->parsed()) return run_superize(sup, out);
    if (e->parsed()) return run_equivalent(eq, out);
    if (n->parsed()) return run_enumerate(en, out);
    if (v->parsed()) return run_verify(ver, out);
    if (g->parsed()) return run_geometry(geo, out);
    if (k->parsed()) return run_census(cen, out, err);
  } catch (const Error& ex) {
    err << "cartan: " << ex.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace cartan::cli
