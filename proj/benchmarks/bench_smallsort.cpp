#include <span>

#include "bench_common.hpp"
#include "sortkit/smallsort/small_sort.hpp"

namespace {

using namespace sortkit;

// Small arrays are sorted in batches so that pausing the timer does not
// dominate the measurement.
constexpr std::size_t kBatch = 1024;

void sort_batch(benchmark::State& state, const SmallSorterId& id) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto fn = small::small_sorter_fn(id);
    std::vector<SortItem> items(n * kBatch);
    Lcg rng(static_cast<std::uint32_t>(n));
    for (auto _ : state) {
        state.PauseTiming();
        bench::fill_random(items, rng);
        state.ResumeTiming();
        for (std::size_t b = 0; b < kBatch; ++b) fn(items.data() + b * n, n);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kBatch));
}

void BM_NetworkBest4Cm(benchmark::State& s) { sort_batch(s, NetworkSorterId{networks::NetworkFamily::Best, SwapStrategy::FourSelect}); }
void BM_NetworkBest4CmS(benchmark::State& s) { sort_batch(s, NetworkSorterId{networks::NetworkFamily::Best, SwapStrategy::FourSelectSplit}); }
void BM_NetworkBestBranching(benchmark::State& s) { sort_batch(s, NetworkSorterId{networks::NetworkFamily::Best, SwapStrategy::Branching}); }
void BM_NetworkBoseNelsonLocality4Cm(benchmark::State& s) {
    sort_batch(s, NetworkSorterId{networks::NetworkFamily::BoseNelsonLocality, SwapStrategy::FourSelect});
}
void BM_InsertionDef(benchmark::State& s) { sort_batch(s, InsertionVariant::Def); }
void BM_InsertionSTL(benchmark::State& s) { sort_batch(s, InsertionVariant::STL); }

BENCHMARK(BM_NetworkBest4Cm)->DenseRange(2, 16);
BENCHMARK(BM_NetworkBest4CmS)->DenseRange(2, 16);
BENCHMARK(BM_NetworkBestBranching)->DenseRange(2, 16);
BENCHMARK(BM_NetworkBoseNelsonLocality4Cm)->DenseRange(2, 16);
BENCHMARK(BM_InsertionDef)->DenseRange(2, 16);
BENCHMARK(BM_InsertionSTL)->DenseRange(2, 16);

}  // namespace
