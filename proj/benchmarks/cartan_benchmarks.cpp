#include <benchmark/benchmark.h>

#include "cartan/catalog.hpp"
#include "cartan/classify.hpp"
#include "cartan/enumeration.hpp"
#include "cartan/equivalence.hpp"
#include "cartan/supermap.hpp"

namespace {

using namespace cartan;

const Catalog& sym() {
  static const Catalog c = load_bundled_catalog(Section::sym);
  return c;
}

const CatalogEntry& largest_entry() {
  const CatalogEntry* best = &sym().entries.front();
  for (const CatalogEntry& e : sym().entries) {
    if (e.h.rank() > best->h.rank()) best = &e;
  }
  return *best;
}

void BM_CanonicalFormCatalog(benchmark::State& state) {
  for (auto _ : state) {
    for (const CatalogEntry& e : sym().entries) benchmark::DoNotOptimize(canonical_form(e.s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sym().entries.size()));
}
BENCHMARK(BM_CanonicalFormCatalog);

void BM_CanonicalFormRank10(benchmark::State& state) {
  const CartanMatrix& h = largest_entry().h;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(h));
}
BENCHMARK(BM_CanonicalFormRank10);

void BM_TypeOfRank10(benchmark::State& state) {
  const CartanMatrix& h = largest_entry().h;
  for (auto _ : state) benchmark::DoNotOptimize(type_of(h));
}
BENCHMARK(BM_TypeOfRank10);

void BM_ClassifySuperCatalog(benchmark::State& state) {
  for (auto _ : state) {
    for (const CatalogEntry& e : sym().entries) benchmark::DoNotOptimize(classify_super(e.s));
  }
}
BENCHMARK(BM_ClassifySuperCatalog);

void BM_FindSuperizationsH3_113(benchmark::State& state) {
  const CartanMatrix h = CartanMatrix::validate({{2, -2, 0}, {-2, 2, -2}, {0, -2, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(find_superizations(h));
}
BENCHMARK(BM_FindSuperizationsH3_113);

void BM_EnumerateHyperbolic(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_hyperbolic({.rank = rank}));
}
BENCHMARK(BM_EnumerateHyperbolic)->DenseRange(3, 10)->Unit(benchmark::kMillisecond);

void BM_PairingReport(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pairing_report(3, 10, SymmetrizableFilter::all, 4, jobs));
}
BENCHMARK(BM_PairingReport)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_VerifyCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_catalog(sym().entries, 1));
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
