#include "sortkit/bench/random.hpp"

namespace sortkit::bench {

void fill_random(std::span<SortItem> items, Lcg& rng) noexcept {
    for (auto& item : items) {
        item.key = rng();
        item.ref = rng();
    }
}

void fill_random(std::span<SortItem> items, std::uint32_t seed) {
    Lcg rng(seed);
    fill_random(items, rng);
}

}  // namespace sortkit::bench
