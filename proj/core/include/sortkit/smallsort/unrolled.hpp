#pragma once

// Direct access to the generated unrolled sorters with a caller-supplied swap
// functor, e.g. swaps::CountingSwap for instrumentation.

#include <cstddef>

#include "sortkit/generated/best_sorters.hpp"
#include "sortkit/generated/bn_l_sorters.hpp"
#include "sortkit/generated/bn_p_sorters.hpp"
#include "sortkit/generated/bn_r_sorters.hpp"
#include "sortkit/networks/network.hpp"

namespace sortkit::small {

template <typename Swap>
void sort_network_with(networks::NetworkFamily family, SortItem* items, std::size_t n, const Swap& swap) {
    switch (family) {
        case networks::NetworkFamily::Best: generated::best::sort(items, n, swap); return;
        case networks::NetworkFamily::BoseNelsonLocality: generated::bn_l::sort(items, n, swap); return;
        case networks::NetworkFamily::BoseNelsonParallel: generated::bn_p::sort(items, n, swap); return;
        case networks::NetworkFamily::BoseNelsonRecursive: generated::bn_r::sort(items, n, swap); return;
    }
}

}  // namespace sortkit::small
