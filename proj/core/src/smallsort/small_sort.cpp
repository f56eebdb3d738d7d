#include "sortkit/smallsort/small_sort.hpp"

#include <stdexcept>
#include <string>

#include "sortkit/errors.hpp"

namespace sortkit::small {

namespace {

using networks::NetworkFamily;

void require_capacity(std::span<SortItem> items, std::size_t n) {
    if (items.size() < n) {
        throw std::invalid_argument("span of " + std::to_string(items.size()) + " items is shorter than n = " +
                                    std::to_string(n));
    }
}

SizedSortFn network_fn(NetworkFamily family, SwapStrategy swap) noexcept {
    switch (family) {
        case NetworkFamily::Best: return detail::family_sorter<NetworkFamily::Best>(swap);
        case NetworkFamily::BoseNelsonLocality: return detail::family_sorter<NetworkFamily::BoseNelsonLocality>(swap);
        case NetworkFamily::BoseNelsonParallel: return detail::family_sorter<NetworkFamily::BoseNelsonParallel>(swap);
        case NetworkFamily::BoseNelsonRecursive:
            return detail::family_sorter<NetworkFamily::BoseNelsonRecursive>(swap);
    }
    return nullptr;
}

template <InsertionVariant V>
void insertion_fn(SortItem* items, std::size_t n) {
    small::insertion_sort(items, n, V);
}

}  // namespace

void sort_network(std::span<SortItem> items, std::size_t n, NetworkFamily family, SwapStrategy swap) {
    if (n < kMinNetworkSize || n > kMaxNetworkSize) throw UnsupportedSize(n, "network sorters cover 2..16");
    require_capacity(items, n);
    network_fn(family, swap)(items.data(), n);
}

void sort_network_interpreted(std::span<SortItem> items, const networks::Network& net, SwapStrategy swap) {
    require_capacity(items, net.channels());
    swaps::visit_strategy(swap, [&](auto sw) {
        for (const auto& c : net.comparators()) sw(items[c.low], items[c.high]);
    });
}

void insertion_sort(std::span<SortItem> items, std::size_t n, InsertionVariant variant) {
    require_capacity(items, n);
    small::insertion_sort(items.data(), n, variant);
}

void sort_small(std::span<SortItem> items, std::size_t n, const SmallSorterId& sorter) {
    if (n <= 1) {
        require_capacity(items, n);
        return;
    }
    if (const auto* net = std::get_if<NetworkSorterId>(&sorter)) {
        sort_network(items, n, net->family, net->swap);
    } else {
        insertion_sort(items, n, std::get<InsertionVariant>(sorter));
    }
}

SizedSortFn small_sorter_fn(const SmallSorterId& sorter) {
    if (const auto* net = std::get_if<NetworkSorterId>(&sorter)) return network_fn(net->family, net->swap);
    switch (std::get<InsertionVariant>(sorter)) {
        case InsertionVariant::Def: return &insertion_fn<InsertionVariant::Def>;
        case InsertionVariant::POp: return &insertion_fn<InsertionVariant::POp>;
        case InsertionVariant::STL: return &insertion_fn<InsertionVariant::STL>;
        case InsertionVariant::AIF: return &insertion_fn<InsertionVariant::AIF>;
    }
    return nullptr;
}

}  // namespace sortkit::small
