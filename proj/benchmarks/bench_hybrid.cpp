#include <algorithm>

#include "bench_common.hpp"
#include "sortkit/hybrid/hybrid_quicksort.hpp"

namespace {

using namespace sortkit;

void hybrid_with(benchmark::State& state, hybrid::BaseSorter base) {
    hybrid::HybridConfig cfg;
    cfg.base_sorter = std::move(base);
    benchmarks::run_sort_loop(state, static_cast<std::size_t>(state.range(0)),
                              [&](std::vector<SortItem>& v) { hybrid::hybrid_quicksort(v, cfg); });
}

void BM_QuicksortNetworkBase(benchmark::State& s) { hybrid_with(s, SmallSorterId{NetworkSorterId{}}); }
void BM_QuicksortInsertionBase(benchmark::State& s) { hybrid_with(s, SmallSorterId{InsertionVariant::STL}); }

void BM_StdSort(benchmark::State& state) {
    benchmarks::run_sort_loop(state, static_cast<std::size_t>(state.range(0)), [](std::vector<SortItem>& v) {
        std::sort(v.begin(), v.end(), KeyLess{});
    });
}

BENCHMARK(BM_QuicksortNetworkBase)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_QuicksortInsertionBase)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_StdSort)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);

}  // namespace
