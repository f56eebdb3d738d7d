#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>

#include "sortkit/rss/config.hpp"
#include "sortkit/smallsort/sorter_id.hpp"
#include "sortkit/swaps/conditional_swap.hpp"

namespace sortkit::hybrid {

using BaseSorter = std::variant<SmallSorterId, rss::RssConfig>;

struct HybridConfig {
    std::size_t base_case_threshold = 16;
    BaseSorter base_sorter = SmallSorterId{NetworkSorterId{}};
    std::size_t depth_limit_factor = 2;
    /// Leave small partitions alone and finish with one insertion sort pass
    /// over the whole array, as libstdc++ does.
    bool final_insertion_pass = false;
    /// Swap used by the three-element pivot network.
    SwapStrategy pivot_swap = SwapStrategy::FourSelect;

    /// Throws ConfigurationError for threshold < 2, or a network base sorter
    /// with threshold > 16.
    void validate() const;
};

struct HybridStats {
    std::uint64_t partitions = 0;
    std::uint64_t base_calls = 0;
    std::size_t max_base_size = 0;
    std::uint64_t heapsort_calls = 0;
    std::size_t max_depth = 0;
};

/// Introsort: median-of-three Hoare partitioning, heapsort below
/// depth_limit_factor * floor(log2 n) levels, base sorter on every partition
/// of at most base_case_threshold items.
void hybrid_quicksort(std::span<SortItem> items, const HybridConfig& cfg, HybridStats* stats = nullptr);

/// Sorts items[lo], items[mid], items[hi] with the three-comparator network
/// (mid,hi) (lo,hi) (lo,mid) and returns mid, which then holds the median.
std::size_t median_of_three_pivot(std::span<SortItem> items, std::size_t lo, std::size_t mid, std::size_t hi,
                                  SwapStrategy swap = SwapStrategy::FourSelect);

/// Unguarded Hoare partition of items[1, n) around the pivot items[0], which
/// also stops the right scan. The caller guarantees some key >= pivot in
/// [1, n). Returns the cut: keys in [1, cut) are <= pivot, keys in [cut, n)
/// are >= pivot.
std::size_t hoare_partition(std::span<SortItem> items);

void heapsort_fallback(std::span<SortItem> items);

}  // namespace sortkit::hybrid
