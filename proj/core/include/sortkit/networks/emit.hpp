#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sortkit/networks/network.hpp"

namespace sortkit::networks {

enum class EmitDialect {
    Table,   ///< the data-table text format (see table_format.hpp)
    Source,  ///< a straight-line C++ sorter function
};

std::optional<EmitDialect> parse_dialect(std::string_view text) noexcept;

/// Emits one sorter for `net`.
///
/// Source dialect produces
///
///     template <typename Swap>
///     inline void sort_<n>(SortItem* items, const Swap& swap) noexcept { ... }
///
/// with one `swap(items[i], items[j]);` per comparator in network order. For
/// BoseNelsonRecursive networks the body instead calls `sort_<a>` on the first
/// half and `sort_<n-a>` on the second half (both must already be emitted)
/// followed by the merger comparators.
std::string emit_unrolled_source(const Network& net, EmitDialect dialect);

/// A complete compilation unit for one family: a header with every sorter
/// for sizes 2..16 plus the size-dispatching entry `sort(items, n, swap)`,
/// and a source file instantiating that entry for each swap strategy.
struct FamilyUnit {
    std::string header;
    std::string source;
};

/// `slug` is the C++-safe family name (best, bn_l, bn_p, bn_r).
std::string_view family_code_name(NetworkFamily family) noexcept;
std::optional<NetworkFamily> parse_family_code_name(std::string_view text) noexcept;

FamilyUnit emit_family_unit(NetworkFamily family);

}  // namespace sortkit::networks
