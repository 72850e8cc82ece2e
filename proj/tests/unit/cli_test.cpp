#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cartan/catalog.hpp"
#include "cartan/cli.hpp"
#include "cartan/json_io.hpp"
#include "fixtures.hpp"

namespace cartan {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("cartan_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string write_matrix(const std::string& name, const CartanMatrix& m, const std::string& label) {
    return write(name, matrix_to_json(m, label).dump());
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, ClassifyHyperbolic) {
  const auto path = write_matrix("h3_93.json", testing::catalog_h("H3_93"), "H3_93");
  const Result r = run({"classify", "--input", path});
  EXPECT_EQ(r.code, cli::exit_ok) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["kind"], "almost_affine");
  EXPECT_EQ(j["name"], "H3_93");

  const Result text = run({"classify", "--input", path, "--format", "text"});
  EXPECT_NE(text.out.find("H3_93: almost_affine"), std::string::npos);
  const Result csv = run({"classify", "--input", path, "--format", "csv"});
  EXPECT_NE(csv.out.find("H3_93,3,eee,almost_affine"), std::string::npos) << csv.out;
}

TEST_F(CliTest, ClassifyBatchAndSuper) {
  json arr = json::array({matrix_to_json(testing::catalog_entry("S3_4").s, "S3_4"),
                          matrix_to_json(testing::catalog_h("H3_4"), "H3_4")});
  const Result r = run({"classify", "-i", write("batch.json", arr.dump())});
  ASSERT_EQ(r.code, cli::exit_ok) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["kind"], "almost_affine");
  EXPECT_EQ(j[1]["kind"], "almost_affine");
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(run({"classify", "--input", write("bad.json", "{\"rows\": [[2, -1], [x]]}")}).code, cli::exit_usage);
  EXPECT_EQ(run({"classify", "--input", write("asym.json", "{\"rows\": [[2, -1], [0, 2]]}")}).code, cli::exit_usage);
  EXPECT_EQ(run({"classify", "--input", (dir_ / "missing.json").string()}).code, cli::exit_usage);
  EXPECT_EQ(run({"classify"}).code, cli::exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::exit_usage);
  EXPECT_EQ(run({}).code, cli::exit_usage);
  EXPECT_EQ(run({"enumerate", "--rank", "2"}).code, cli::exit_usage);
  EXPECT_EQ(run({"enumerate", "--ranks", "three"}).code, cli::exit_usage);
  EXPECT_EQ(run({"enumerate", "--rank", "3", "--format", "yaml"}).code, cli::exit_usage);
  const Result r = run({"classify", "--input", write("neg.json", "{\"rows\": [[2, 1], [1, 2]]}")});
  EXPECT_NE(r.err.find("PositiveOffDiagonal"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, EverySubcommandHasHelp) {
  for (const char* sub :
       {"classify", "desuperize", "superize", "equivalent", "enumerate", "verify-catalog", "geometry", "census"}) {
    const Result r = run({sub, "--help"});
    EXPECT_EQ(r.code, cli::exit_ok) << sub;
    EXPECT_NE(r.out.find("--format"), std::string::npos) << sub;
    EXPECT_NE(r.out.find("Exit status"), std::string::npos) << sub;
    EXPECT_NE(r.out.find("JSON"), std::string::npos) << sub;
  }
  EXPECT_EQ(run({"--help"}).code, cli::exit_ok);
}

TEST_F(CliTest, DesuperizeAndSuperize) {
  const auto s = write_matrix("s.json", testing::catalog_entry("S3_46").s, "S3_46");
  const Result d = run({"desuperize", "-i", s});
  ASSERT_EQ(d.code, cli::exit_ok) << d.err;
  EXPECT_EQ(matrix_from_json(json::parse(d.out)).matrix, testing::catalog_h("H3_93"));

  const auto h = write_matrix("h.json", testing::catalog_h("H3_113"), "H3_113");
  const Result sup = run({"superize", "-i", h});
  ASSERT_EQ(sup.code, cli::exit_ok) << sup.err;
  EXPECT_EQ(json::parse(sup.out)["multiplicity"], 5);

  const auto affine = write("affine.json", R"({"rows": [[2, -2], [-2, 2]]})");
  EXPECT_EQ(run({"superize", "-i", affine}).code, cli::exit_usage);
  const Result relaxed = run({"superize", "-i", affine, "--relax"});
  EXPECT_EQ(relaxed.code, cli::exit_ok);
  EXPECT_EQ(json::parse(relaxed.out)["multiplicity"], 2);
}

TEST_F(CliTest, Equivalent) {
  const auto a = write("a.json", R"({"rows": [[2, -1], [-2, 2]]})");
  const auto b = write("b.json", R"({"rows": [[2, -2], [-1, 2]]})");
  const auto c = write("c.json", R"({"rows": [[2, -2], [-2, 2]]})");
  const Result yes = run({"equivalent", a, b});
  EXPECT_EQ(yes.code, cli::exit_ok);
  EXPECT_EQ(json::parse(yes.out)["sigma"], json::parse("[2, 1]"));
  const Result no = run({"equivalent", a, c});
  EXPECT_EQ(no.code, cli::exit_mismatch);
  EXPECT_TRUE(json::parse(no.out)["sigma"].is_null());
}

TEST_F(CliTest, EnumerateIsStableAcrossWorkers) {
  const Result one = run({"enumerate", "--ranks", "3..5", "--jobs", "1"});
  const Result four = run({"enumerate", "--ranks", "3..5", "--jobs", "4"});
  ASSERT_EQ(one.code, cli::exit_ok) << one.err;
  EXPECT_EQ(one.out, four.out);
  const json j = json::parse(one.out);
  EXPECT_EQ(j["per_rank"]["3"], 123);
  EXPECT_EQ(j["per_rank"]["4"], 53);
  EXPECT_EQ(j["matrices"].size(), j["total"].get<std::size_t>());

  const Result sup = run({"enumerate", "--rank", "3", "--super", "--sym", "nonsym"});
  EXPECT_EQ(json::parse(sup.out)["total"], 33);
  const Result csv = run({"enumerate", "--rank", "7", "--format", "csv"});
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 5);
  const Result tex = run({"enumerate", "--rank", "7", "--format", "latex"});
  EXPECT_NE(tex.out.find("\\begin{longtable}"), std::string::npos);
}

TEST_F(CliTest, VerifyCatalog) {
  const std::filesystem::path sym = default_catalog_dir() / "catalog_sym.json";
  const Result r = run({"verify-catalog", sym.string()});
  EXPECT_EQ(r.code, cli::exit_ok) << r.err;
  EXPECT_NE(r.out.find("97/97 entries pass"), std::string::npos);

  const Result ns = run({"verify-catalog", "--section", "nonsym", "--stats", "--format", "json", "--jobs", "3"});
  EXPECT_EQ(ns.code, cli::exit_ok);
  const json j = json::parse(ns.out);
  EXPECT_EQ(j["passed"], 36);
  EXPECT_EQ(j["stats"]["distinct_h_count"], 30);

  const Result tex = run({"verify-catalog", "--format", "latex"});
  EXPECT_NE(tex.out.find("S3_4 & H3_4 & pass"), std::string::npos);
}

TEST_F(CliTest, VerifyCatalogReportsTamperedEntry) {
  std::ifstream in(default_catalog_dir() / "catalog_sym.json");
  json doc = json::parse(in);
  doc["entries"][0]["perm"] = nullptr;
  ASSERT_EQ(doc["entries"][0]["s_name"], "S3_4");
  const Result r = run({"verify-catalog", write("tampered.json", doc.dump())});
  EXPECT_EQ(r.code, cli::exit_mismatch);
  EXPECT_NE(r.out.find("96/97 entries pass"), std::string::npos);
  EXPECT_NE(r.out.find("pair: FAIL"), std::string::npos);
}

TEST_F(CliTest, CatalogDirectoryOverride) {
  write("catalog_sym.json", R"({"section": "sym", "entries": []})");
  ::setenv("CARTAN_CATALOG_DIR", dir_.c_str(), 1);
  const Result r = run({"verify-catalog"});
  ::unsetenv("CARTAN_CATALOG_DIR");
  EXPECT_NE(r.out.find("0/0 entries pass"), std::string::npos) << r.out;
}

TEST_F(CliTest, Geometry) {
  const auto h = write_matrix("h.json", testing::catalog_h("H3_93"), "H3_93");
  const Result r = run({"geometry", "--input", h, "--embed"});
  ASSERT_EQ(r.code, cli::exit_ok) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["cos2"][0][1], "-1");
  EXPECT_EQ(j["signature"]["negative"], 1);
  EXPECT_TRUE(j["lorentzian"].get<bool>());
  EXPECT_EQ(j["embedding"]["vectors"].size(), 3u);

  const auto ns = write_matrix("ns.json", testing::catalog_entry("NS3_1").s, "NS3_1");
  EXPECT_EQ(run({"geometry", "--input", ns}).code, cli::exit_usage);
  const auto fin = write("a2.json", R"({"rows": [[2, -1], [-1, 2]]})");
  EXPECT_EQ(run({"geometry", "--input", fin}).code, cli::exit_ok);
  EXPECT_EQ(run({"geometry", "--input", fin, "--embed"}).code, cli::exit_usage);
}

TEST_F(CliTest, CensusMatchesTargets) {
  const Result r = run({"census", "--format", "json"});
  ASSERT_EQ(r.code, cli::exit_ok) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["totals"]["hyperbolic"], 238);
  for (const json& t : j["targets"]) EXPECT_TRUE(t["ok"].get<bool>()) << t.dump();
  for (const json& d : j["catalog_diff"]) {
    EXPECT_TRUE(d["extra"].empty()) << d.dump();
    EXPECT_TRUE(d["missing"].empty()) << d.dump();
  }
  const Result text = run({"census", "--jobs", "2"});
  EXPECT_NE(text.out.find("census matches"), std::string::npos);
}

TEST_F(CliTest, CensusReportsPerRankDiffOnMismatch) {
  // A tighter entry bound loses classes; the census must say so and name
  // them instead of passing quietly.
  const Result r = run({"census", "--max-entry", "2"});
  EXPECT_EQ(r.code, cli::exit_mismatch);
  EXPECT_NE(r.out.find("MISMATCH hyperbolic_sym"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("missing"), std::string::npos);
  EXPECT_NE(r.out.find("census MISMATCH"), std::string::npos);
}

}  // namespace
}  // namespace cartan
