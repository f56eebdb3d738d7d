#pragma once

#include <cstdint>
#include <span>

#include "sortkit/sort_item.hpp"

namespace sortkit::bench {

/// 2^61 - 1
inline constexpr std::uint64_t kFingerprintPrime = (std::uint64_t{1} << 61) - 1;

struct Fingerprint {
    std::uint64_t v = 0;
    std::uint64_t z_used = 0;

    friend constexpr bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// v = prod (z - key) mod p over all keys, with z incremented until v != 0.
/// Invariant under permutation. p must be prime and below 2^63.
Fingerprint fingerprint(std::span<const SortItem> items, std::uint64_t z = 1, std::uint64_t p = kFingerprintPrime);

/// Product for a fixed z, possibly zero.
std::uint64_t fingerprint_product(std::span<const SortItem> items, std::uint64_t z, std::uint64_t p);

/// True iff keys are nondecreasing. Always scans the whole range, so its cost
/// does not depend on where the first inversion is.
bool check_sorted(std::span<const SortItem> items) noexcept;

}  // namespace sortkit::bench
