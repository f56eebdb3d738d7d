#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "sortkit/lcg.hpp"
#include "sortkit/rss/classify.hpp"
#include "sortkit/rss/config.hpp"

namespace sortkit::rss {

struct RssStats {
    std::uint64_t classified = 0;   ///< elements passed through the classifier
    std::uint64_t base_calls = 0;   ///< base sorter invocations
    std::uint64_t fallbacks = 0;    ///< ranges sorted by insertion sort (tiny sample or no progress)
    std::size_t max_base_size = 0;
    std::size_t max_depth = 0;
};

/// Draws a*4 distinct positions from `rng`, sorts their items and returns the
/// keys at 1-based sample ranks a, 2a, 3a. Returns nullopt if the range holds
/// fewer than a*4 items.
std::optional<SplitterSet> select_splitters(std::span<const SortItem> items, const RssConfig& cfg, Lcg& rng);

/// Sorts by key. Not stable. Throws ConfigurationError for an invalid config.
void rss_sort(std::span<SortItem> items, const RssConfig& cfg, RssStats* stats = nullptr);

}  // namespace sortkit::rss
