#include "bench_common.hpp"
#include "sortkit/rss/rss_sort.hpp"

namespace {

using namespace sortkit;

void rss_with(benchmark::State& state, SmallSorterId base) {
    rss::RssConfig cfg;
    cfg.block_size = 2;
    cfg.base_sorter = base;
    benchmarks::run_sort_loop(state, static_cast<std::size_t>(state.range(0)),
                              [&](std::vector<SortItem>& v) { rss::rss_sort(v, cfg); });
}

void BM_RssNetworkBase(benchmark::State& s) { rss_with(s, NetworkSorterId{}); }
void BM_RssInsertionBase(benchmark::State& s) { rss_with(s, InsertionVariant::Def); }

BENCHMARK(BM_RssNetworkBase)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_RssInsertionBase)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace
