#pragma once

// Glue between the build-time generated sorter units and the runtime API.
// Each generated unit specializes family_sorter<F> for its family.

#include <cstddef>

#include "sortkit/networks/network.hpp"
#include "sortkit/sort_item.hpp"
#include "sortkit/swaps/conditional_swap.hpp"

namespace sortkit::small {

/// A sorter bound to one algorithm; sorts the first n items of the array.
using SizedSortFn = void (*)(SortItem* items, std::size_t n);

namespace detail {

template <typename Entry>
struct FamilyTable {
    template <SwapStrategy S>
    static void run(SortItem* items, std::size_t n) {
        Entry::sort(items, n, swaps::ConditionalSwap<S>{});
    }

    static SizedSortFn lookup(SwapStrategy s) noexcept {
        switch (s) {
            case SwapStrategy::Branching: return &run<SwapStrategy::Branching>;
            case SwapStrategy::TernarySelect: return &run<SwapStrategy::TernarySelect>;
            case SwapStrategy::PairAssign: return &run<SwapStrategy::PairAssign>;
            case SwapStrategy::JumpExchange: return &run<SwapStrategy::JumpExchange>;
            case SwapStrategy::FourSelect: return &run<SwapStrategy::FourSelect>;
            case SwapStrategy::FourSelectSplit: return &run<SwapStrategy::FourSelectSplit>;
            case SwapStrategy::SixSelect: return &run<SwapStrategy::SixSelect>;
            case SwapStrategy::IndirectSelect: return &run<SwapStrategy::IndirectSelect>;
            case SwapStrategy::PredicateIndirectSelect: return &run<SwapStrategy::PredicateIndirectSelect>;
        }
        return nullptr;
    }
};

template <networks::NetworkFamily F>
SizedSortFn family_sorter(SwapStrategy swap) noexcept;

}  // namespace detail
}  // namespace sortkit::small
