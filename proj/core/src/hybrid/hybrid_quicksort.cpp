#include "sortkit/hybrid/hybrid_quicksort.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "sortkit/errors.hpp"
#include "sortkit/rss/rss_sort.hpp"
#include "sortkit/smallsort/insertion_sort.hpp"
#include "sortkit/smallsort/small_sort.hpp"

namespace sortkit::hybrid {

namespace {

template <typename Swap>
void sort3(SortItem& a, SortItem& b, SortItem& c, const Swap& swap) noexcept {
    swap(b, c);
    swap(a, c);
    swap(a, b);
}

SortItem* partition_unguarded(SortItem* first, SortItem* last, const SortItem* pivot) noexcept {
    const std::uint64_t p = pivot->key;
    while (true) {
        while (first->key < p) ++first;
        --last;
        while (p < last->key) --last;
        if (!(first < last)) return first;
        std::swap(*first, *last);
        ++first;
    }
}

template <typename Swap>
SortItem* partition_pivot(SortItem* first, SortItem* last, const Swap& swap) noexcept {
    SortItem* mid = first + (last - first) / 2;
    sort3(first[1], *mid, last[-1], swap);
    std::swap(*first, *mid);
    return partition_unguarded(first + 1, last, first);
}

template <typename Swap, typename Base>
struct Introsort {
    const HybridConfig& cfg;
    const Swap& swap;
    Base base;
    HybridStats* stats;

    void base_case(SortItem* first, std::size_t n) {
        if (cfg.final_insertion_pass) return;
        if (stats != nullptr) {
            ++stats->base_calls;
            stats->max_base_size = std::max(stats->max_base_size, n);
        }
        if (n > 1) base(first, n);
    }

    void loop(SortItem* first, SortItem* last, std::size_t depth_limit, std::size_t depth) {
        if (stats != nullptr) stats->max_depth = std::max(stats->max_depth, depth);
        while (static_cast<std::size_t>(last - first) > cfg.base_case_threshold) {
            if (last - first == 3) {
                // No three distinct sample positions; the network sorts it outright.
                sort3(first[0], first[1], first[2], swap);
                return;
            }
            if (depth_limit == 0) {
                if (stats != nullptr) ++stats->heapsort_calls;
                heapsort_fallback(std::span<SortItem>(first, last));
                return;
            }
            --depth_limit;
            if (stats != nullptr) ++stats->partitions;
            SortItem* cut = partition_pivot(first, last, swap);
            loop(cut, last, depth_limit, depth + 1);
            last = cut;
        }
        base_case(first, static_cast<std::size_t>(last - first));
    }
};

template <typename Swap, typename Base>
void run(std::span<SortItem> items, const HybridConfig& cfg, const Swap& swap, Base base, HybridStats* stats) {
    const std::size_t n = items.size();
    if (n == 0) return;
    const std::size_t depth_limit = cfg.depth_limit_factor * static_cast<std::size_t>(std::bit_width(n) - 1);
    Introsort<Swap, Base> sorter{cfg, swap, std::move(base), stats};
    sorter.loop(items.data(), items.data() + n, depth_limit, 0);
    if (cfg.final_insertion_pass) small::insertion_sort_stl(items.data(), n);
}

}  // namespace

void HybridConfig::validate() const {
    if (base_case_threshold < 2) throw ConfigurationError("quicksort base case threshold must be at least 2");
    if (const auto* small_id = std::get_if<SmallSorterId>(&base_sorter)) {
        if (is_network(*small_id) && base_case_threshold > small::kMaxNetworkSize) {
            throw ConfigurationError("quicksort base case threshold " + std::to_string(base_case_threshold) +
                                     " exceeds the network sorter limit of 16");
        }
    } else {
        std::get<rss::RssConfig>(base_sorter).validate();
    }
}

void hybrid_quicksort(std::span<SortItem> items, const HybridConfig& cfg, HybridStats* stats) {
    cfg.validate();
    swaps::visit_strategy(cfg.pivot_swap, [&](auto swap) {
        if (const auto* small_id = std::get_if<SmallSorterId>(&cfg.base_sorter)) {
            run(items, cfg, swap, small::small_sorter_fn(*small_id), stats);
        } else {
            const rss::RssConfig& rss_cfg = std::get<rss::RssConfig>(cfg.base_sorter);
            run(items, cfg, swap,
                [&rss_cfg](SortItem* first, std::size_t n) { rss::rss_sort(std::span<SortItem>(first, n), rss_cfg); },
                stats);
        }
    });
}

std::size_t median_of_three_pivot(std::span<SortItem> items, std::size_t lo, std::size_t mid, std::size_t hi,
                                  SwapStrategy swap) {
    if (!(lo < mid && mid < hi && hi < items.size())) {
        throw std::invalid_argument("median_of_three_pivot requires lo < mid < hi < size");
    }
    swaps::visit_strategy(swap, [&](auto sw) { sort3(items[lo], items[mid], items[hi], sw); });
    return mid;
}

std::size_t hoare_partition(std::span<SortItem> items) {
    if (items.size() < 2) throw std::invalid_argument("hoare_partition needs a pivot and at least one item");
    return static_cast<std::size_t>(partition_unguarded(items.data() + 1, items.data() + items.size(), items.data()) -
                                    items.data());
}

void heapsort_fallback(std::span<SortItem> items) {
    std::make_heap(items.begin(), items.end(), KeyLess{});
    std::sort_heap(items.begin(), items.end(), KeyLess{});
}

}  // namespace sortkit::hybrid
