#include "sortkit/rss/rss_sort.hpp"

#include <algorithm>
#include <array>
#include <memory>

#include "sortkit/smallsort/insertion_sort.hpp"
#include "sortkit/smallsort/small_sort.hpp"

namespace sortkit::rss {

namespace {

constexpr std::size_t kMaxSample = 9 * kNumBuckets;

void sort_sample(SortItem* sample, std::size_t m, const RssConfig& cfg) {
    if (m <= small::kMaxNetworkSize || !is_network(cfg.base_sorter)) {
        small::sort_small(std::span<SortItem>(sample, m), m, cfg.base_sorter);
    } else {
        small::insertion_sort_def(sample, m);
    }
}

struct Context {
    const RssConfig& cfg;
    small::SizedSortFn base;
    Lcg rng;
    SortItem* scratch;
    std::uint8_t* oracle;
    RssStats* stats;
};

void fallback(SortItem* items, std::size_t n, Context& ctx) {
    small::insertion_sort_def(items, n);
    if (ctx.stats != nullptr) ++ctx.stats->fallbacks;
}

void sort_range(SortItem* items, std::size_t n, std::size_t offset, std::size_t depth, Context& ctx) {
    if (ctx.stats != nullptr) ctx.stats->max_depth = std::max(ctx.stats->max_depth, depth);
    if (n <= ctx.cfg.base_case_threshold) {
        if (n > 1) ctx.base(items, n);
        if (ctx.stats != nullptr) {
            ++ctx.stats->base_calls;
            ctx.stats->max_base_size = std::max(ctx.stats->max_base_size, n);
        }
        return;
    }
    const auto splitters = select_splitters(std::span<const SortItem>(items, n), ctx.cfg, ctx.rng);
    if (!splitters) {
        fallback(items, n, ctx);
        return;
    }

    std::uint8_t* oracle = ctx.oracle + offset;
    std::array<std::size_t, kNumBuckets> counts{};
    classify_block(items, n, *splitters, ctx.cfg.block_size, oracle, counts.data());
    if (ctx.stats != nullptr) ctx.stats->classified += n;
    if (*std::max_element(counts.begin(), counts.end()) == n) {
        fallback(items, n, ctx);
        return;
    }

    std::array<std::size_t, kNumBuckets> starts{};
    for (std::size_t b = 1; b < kNumBuckets; ++b) starts[b] = starts[b - 1] + counts[b - 1];
    auto cursor = starts;
    SortItem* scratch = ctx.scratch + offset;
    for (std::size_t i = 0; i < n; ++i) scratch[cursor[oracle[i]]++] = items[i];
    std::copy(scratch, scratch + n, items);

    for (std::size_t b = 0; b < kNumBuckets; ++b) {
        sort_range(items + starts[b], counts[b], offset + starts[b], depth + 1, ctx);
    }
}

}  // namespace

std::optional<SplitterSet> select_splitters(std::span<const SortItem> items, const RssConfig& cfg, Lcg& rng) {
    const std::size_t m = cfg.sample_size();
    const std::size_t n = items.size();
    if (m > kMaxSample) throw ConfigurationError("RSS sample size exceeds 36 items");
    if (n < m) return std::nullopt;

    // Floyd's algorithm: m distinct positions out of n.
    std::array<std::size_t, kMaxSample> picked{};
    std::size_t count = 0;
    for (std::size_t j = n - m; j < n; ++j) {
        std::size_t t = static_cast<std::size_t>(rng() % (j + 1));
        if (std::find(picked.begin(), picked.begin() + count, t) != picked.begin() + count) t = j;
        picked[count++] = t;
    }
    std::array<SortItem, kMaxSample> sample{};
    for (std::size_t i = 0; i < m; ++i) sample[i] = items[picked[i]];
    sort_sample(sample.data(), m, cfg);

    const std::size_t a = cfg.oversampling;
    return SplitterSet{sample[a - 1].key, sample[2 * a - 1].key, sample[3 * a - 1].key};
}

void rss_sort(std::span<SortItem> items, const RssConfig& cfg, RssStats* stats) {
    cfg.validate();
    const std::size_t n = items.size();
    if (n <= cfg.base_case_threshold) {
        Context ctx{cfg, small::small_sorter_fn(cfg.base_sorter), Lcg(cfg.sample_seed), nullptr, nullptr, stats};
        sort_range(items.data(), n, 0, 0, ctx);
        return;
    }
    auto scratch = std::make_unique_for_overwrite<SortItem[]>(n);
    auto oracle = std::make_unique_for_overwrite<std::uint8_t[]>(n);
    Context ctx{cfg, small::small_sorter_fn(cfg.base_sorter), Lcg(cfg.sample_seed), scratch.get(), oracle.get(), stats};
    sort_range(items.data(), n, 0, 0, ctx);
}

}  // namespace sortkit::rss
