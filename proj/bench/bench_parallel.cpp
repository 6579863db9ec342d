#include <benchmark/benchmark.h>

#include "gamesem/kernels.hpp"
#include "gamesem/laws.hpp"

using namespace gs;

static void BM_CorpusRoundTrips(benchmark::State& st) {
  auto corpus = standardCorpus(GS_CORPUS_DIR);
  bool serial = st.range(0) == 0;
  for (auto _ : st) benchmark::DoNotOptimize(checkRoundTrips(corpus, serial));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(corpus.size()));
  st.SetLabel(serial ? "serial" : "parallel");
}
BENCHMARK(BM_CorpusRoundTrips)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Canonicalization(benchmark::State& st) {
  auto fs = randomFormulas(8, 1000, 30);
  bool serial = st.range(0) == 0;
  for (auto _ : st) benchmark::DoNotOptimize(checkCanonicalization(fs, serial));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(fs.size()));
  st.SetLabel(serial ? "serial" : "parallel");
}
BENCHMARK(BM_Canonicalization)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CategoryLaws(benchmark::State& st) {
  MorphismPool pool = randomPool(2024);
  bool serial = st.range(0) == 0;
  for (auto _ : st) benchmark::DoNotOptimize(checkCategoryLaws(pool, 2024, 250, serial));
  st.SetItemsProcessed(st.iterations() * 250);
  st.SetLabel(serial ? "serial" : "parallel");
}
BENCHMARK(BM_CategoryLaws)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
