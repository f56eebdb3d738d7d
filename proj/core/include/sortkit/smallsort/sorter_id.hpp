#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sortkit/networks/network.hpp"
#include "sortkit/smallsort/insertion_sort.hpp"
#include "sortkit/swaps/conditional_swap.hpp"

namespace sortkit {

struct NetworkSorterId {
    networks::NetworkFamily family = networks::NetworkFamily::Best;
    SwapStrategy swap = SwapStrategy::FourSelect;

    friend constexpr bool operator==(const NetworkSorterId&, const NetworkSorterId&) = default;
};

/// Either a network family with a swap strategy, or an insertion sort variant
/// (which carries no swap strategy).
using SmallSorterId = std::variant<NetworkSorterId, InsertionVariant>;

/// "SN BN-L 4CmS", "IS Def"
std::string small_sorter_label(const SmallSorterId& id);

/// Parses the label grammar above (whitespace-separated, exact tokens).
/// Throws ConfigurationError on anything else.
SmallSorterId parse_small_sorter(std::string_view label);

constexpr bool is_network(const SmallSorterId& id) noexcept {
    return std::holds_alternative<NetworkSorterId>(id);
}

/// Every network family x swap strategy plus the four insertion sorts.
std::vector<SmallSorterId> all_small_sorters();

}  // namespace sortkit
