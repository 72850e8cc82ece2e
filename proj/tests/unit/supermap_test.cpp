#include <gtest/gtest.h>

#include "cartan/equivalence.hpp"
#include "cartan/error.hpp"
#include "cartan/json_io.hpp"
#include "cartan/supermap.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "properties.hpp"

namespace cartan {
namespace {

using testing::mat;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::io_error;
}

TEST(Desuperize, Examples) {
  EXPECT_EQ(desuperize(testing::catalog_entry("S3_4").s), mat({{2, -1, -2}, {-2, 2, -2}, {-2, -1, 2}}));
  const CartanMatrix s46 = testing::catalog_entry("S3_46").s;
  EXPECT_EQ(s46, mat({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
  EXPECT_EQ(desuperize(s46), testing::catalog_h("H3_93"));
  // osp(1|2n) tail line becomes the sp(2n) one.
  const CartanMatrix osp = mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
  EXPECT_EQ(desuperize(osp), mat({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  EXPECT_TRUE(desuperize(osp).is_even());
}

TEST(Desuperize, Errors) {
  EXPECT_EQ(code_of([] { desuperize(mat({{2, -1}, {-1, 2}})); }), ErrorCode::no_odd_index);
  EXPECT_EQ(code_of([] { desuperize(mat({{0, -1}, {-1, 1}})); }), ErrorCode::isotropic_unsupported);
}

TEST(VerifyPair, Examples) {
  const CartanMatrix s4 = testing::catalog_entry("S3_4").s;
  const CartanMatrix h4 = testing::catalog_h("H3_4");
  EXPECT_TRUE(verify_pair(s4, h4, Permutation::from_one_based({2, 3, 1})));
  EXPECT_FALSE(verify_pair(s4, h4, Permutation::identity(3)));
  EXPECT_FALSE(verify_pair(s4, h4, std::nullopt));
  EXPECT_TRUE(verify_pair(testing::catalog_entry("S3_46").s, testing::catalog_h("H3_93"), std::nullopt));
  EXPECT_EQ(code_of([&] { verify_pair(s4, mat({{2}}), std::nullopt); }), ErrorCode::size_mismatch);
}

TEST(FindSuperizations, Examples) {
  EXPECT_EQ(find_superizations(testing::catalog_h("H3_113")).multiplicity(), 5u);
  EXPECT_EQ(find_superizations(mat({{2, -2, 0}, {-2, 2, -2}, {0, -2, 2}})).multiplicity(), 5u);
  EXPECT_EQ(find_superizations(mat({{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}})).multiplicity(), 3u);
  const SuperizationReport r4 = find_superizations(testing::catalog_h("H3_4"));
  ASSERT_EQ(r4.multiplicity(), 1u);
  EXPECT_TRUE(are_equivalent(testing::catalog_entry("S3_4").s, r4.superizations.front()));
}

TEST(FindSuperizations, Errors) {
  EXPECT_EQ(code_of([] { find_superizations(mat({{1, -1}, {-1, 2}})); }), ErrorCode::not_even);
  EXPECT_EQ(code_of([] { find_superizations(mat({{2, -2}, {-2, 2}})); }), ErrorCode::not_almost_affine);
  // The relaxed mode reports halvings of any even matrix.
  const SuperizationReport r = find_superizations(mat({{2, -2}, {-2, 2}}), {.require_almost_affine = false});
  EXPECT_EQ(r.multiplicity(), 2u);  // one odd index up to swap, or both odd
}

TEST(FindSuperizations, JsonShape) {
  const json j = to_json(find_superizations(testing::catalog_h("H3_4")));
  EXPECT_EQ(j["multiplicity"], 1);
  EXPECT_EQ(j["superizations"].size(), 1u);
  EXPECT_EQ(j["h"]["parity"], "eee");
}

TEST(FindSuperizations, ParityCounts) {
  for (const auto& [name, h] : testing::distinct_h(testing::sym_catalog())) {
    for (const CartanMatrix& s : find_superizations(h).superizations) {
      EXPECT_TRUE(s.has_odd_non_isotropic()) << name;
      EXPECT_TRUE(desuperize(s).is_even());
      EXPECT_TRUE(are_equivalent(desuperize(s), h)) << name;
    }
  }
}

TEST(FindSuperizations, RoundTripFromPermutedH) {
  testing::Rng rng(8);
  for (const Catalog* c : {&testing::sym_catalog(), &testing::nonsym_catalog()}) {
    for (const CatalogEntry& e : c->entries) {
      const CartanMatrix h = testing::relabel(desuperize(e.s), testing::random_permutation(rng, e.s.rank()));
      bool found = false;
      for (const CartanMatrix& s : find_superizations(h).superizations) found = found || are_equivalent(e.s, s);
      EXPECT_TRUE(found) << e.s_name;
    }
  }
}

TEST(Properties, DesuperizeCommutesWithMainSubmatrices) {
  for (const Catalog* c : {&testing::sym_catalog(), &testing::nonsym_catalog()}) {
    const auto r = testing::desuperize_commutes(*c);
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(Properties, CatalogClassesAreExactlyTheSuperizations) {
  const auto sym = testing::superization_classes(testing::sym_catalog());
  EXPECT_TRUE(sym.passed()) << sym.summary();
  EXPECT_EQ(sym.cases, 66u);
  const auto nonsym = testing::superization_classes(testing::nonsym_catalog());
  EXPECT_TRUE(nonsym.passed()) << nonsym.summary();
  EXPECT_EQ(nonsym.cases, 30u);
}

}  // namespace
}  // namespace cartan
