#pragma once

#include <cstdint>
#include <span>

#include "sortkit/lcg.hpp"
#include "sortkit/sort_item.hpp"

namespace sortkit::bench {

/// Draws key then ref for each item from the generator, continuing its stream.
void fill_random(std::span<SortItem> items, Lcg& rng) noexcept;

/// Fresh stream from `seed` (1 .. 2^31 - 2).
void fill_random(std::span<SortItem> items, std::uint32_t seed);

}  // namespace sortkit::bench
