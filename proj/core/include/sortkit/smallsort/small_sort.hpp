#pragma once

#include <cstddef>
#include <span>

#include "sortkit/networks/network.hpp"
#include "sortkit/smallsort/family_table.hpp"
#include "sortkit/smallsort/sorter_id.hpp"

namespace sortkit::small {

inline constexpr std::size_t kMinNetworkSize = 2;
inline constexpr std::size_t kMaxNetworkSize = 16;

/// Sorts items[0, n) with the unrolled network sorter for (family, n).
/// Throws UnsupportedSize for n outside 2..16 and std::invalid_argument if the
/// span holds fewer than n items.
void sort_network(std::span<SortItem> items, std::size_t n,
                  networks::NetworkFamily family = networks::NetworkFamily::Best,
                  SwapStrategy swap = SwapStrategy::FourSelect);

/// Executes an arbitrary comparator table at runtime.
void sort_network_interpreted(std::span<SortItem> items, const networks::Network& net,
                              SwapStrategy swap = SwapStrategy::FourSelect);

/// No size cap.
void insertion_sort(std::span<SortItem> items, std::size_t n, InsertionVariant variant);

/// Uniform entry: n in {0, 1} returns immediately; network sorters require n <= 16.
void sort_small(std::span<SortItem> items, std::size_t n, const SmallSorterId& sorter);

/// The sorter as a plain function pointer, for callers that dispatch many
/// times with the same id (hybrid quicksort, RSS, benchmarks). The returned
/// function performs no size validation; network sorters ignore n outside 2..16.
SizedSortFn small_sorter_fn(const SmallSorterId& sorter);

}  // namespace sortkit::small
