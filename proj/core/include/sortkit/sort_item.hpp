#pragma once

#include <cstdint>

namespace sortkit {

/// The unit sorted everywhere: a 64-bit key plus an opaque 64-bit reference
/// (a pointer or array index into the real payload). Ordering is by key only;
/// the reference travels with its key.
struct SortItem {
    std::uint64_t key = 0;
    std::uint64_t ref = 0;

    /// Bitwise identity of both fields, not key equality.
    friend constexpr bool operator==(const SortItem&, const SortItem&) = default;
};

static_assert(sizeof(SortItem) == 16);

struct KeyLess {
    constexpr bool operator()(const SortItem& a, const SortItem& b) const noexcept {
        return a.key < b.key;
    }
};

}  // namespace sortkit
