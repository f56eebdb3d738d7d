#pragma once

#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "sortkit/bench/random.hpp"
#include "sortkit/lcg.hpp"
#include "sortkit/sort_item.hpp"

namespace sortkit::benchmarks {

// Refills `items` from `rng` outside the timed region, then times `sort`.
template <typename Sort>
void run_sort_loop(benchmark::State& state, std::size_t n, Sort&& sort) {
    std::vector<SortItem> items(n);
    Lcg rng(static_cast<std::uint32_t>(n) + 1);
    for (auto _ : state) {
        state.PauseTiming();
        bench::fill_random(items, rng);
        state.ResumeTiming();
        sort(items);
        benchmark::DoNotOptimize(items.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

}  // namespace sortkit::benchmarks
