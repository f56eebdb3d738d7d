#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sortkit/bench/measure.hpp"
#include "sortkit/hybrid/hybrid_quicksort.hpp"
#include "sortkit/rss/config.hpp"
#include "sortkit/smallsort/family_table.hpp"
#include "sortkit/smallsort/sorter_id.hpp"

namespace sortkit::bench {

struct StdSortId {
    friend constexpr bool operator==(StdSortId, StdSortId) = default;
};

using SorterSpec = std::variant<SmallSorterId, rss::RssConfig, hybrid::HybridConfig, StdSortId>;

/// A sorter resolved from its label, callable as sorter(items, n).
struct RegisteredSorter {
    std::string label;
    SorterSpec spec;
    std::size_t max_size = std::numeric_limits<std::size_t>::max();
    small::SizedSortFn direct = nullptr;  ///< set for small sorters
    std::function<void(SortItem*, std::size_t)> general;

    void operator()(SortItem* items, std::size_t n) const {
        if (direct != nullptr) {
            direct(items, n);
        } else {
            general(items, n);
        }
    }

    bool supports(std::size_t n) const noexcept { return n <= max_size; }
};

/// Label grammar, tokens separated by single or repeated spaces:
///   SN <family> <swap>          e.g. "SN BN-L 4CmS"
///   IS <variant>                e.g. "IS Def"
///   RSS <xyz> <small sorter>    e.g. "RSS 332 SN Best 4CmS"
///   QS <small sorter>           quicksort, base case <= 16 sorted at once
///   QS RSS <xyz> <small sorter> quicksort with an RSS base case
///   QSort                       quicksort with a final insertion pass
///   StdSort                     the standard library sort
/// Throws ConfigurationError for anything else.
RegisteredSorter resolve_sorter(std::string_view label);

/// Canonical label, as produced by resolve_sorter(label).label.
std::string sorter_label(const SorterSpec& spec);

/// Splits a comma-separated selector list and resolves every entry.
std::vector<RegisteredSorter> resolve_sorters(std::string_view comma_list);

/// Threshold above which quicksort hands partitions to an RSS base case.
inline constexpr std::size_t kQuicksortRssThreshold = 256;

std::vector<MeasurementRecord> measure(const RegisteredSorter& sorter, const OneArrayRepeatParams& p,
                                       SeedSource& seeds, LoopDiagnostics* diag = nullptr);

std::vector<MeasurementRecord> measure(const RegisteredSorter& sorter, const ArrayInRowParams& p, SeedSource& seeds,
                                       LoopDiagnostics* diag = nullptr);

}  // namespace sortkit::bench
