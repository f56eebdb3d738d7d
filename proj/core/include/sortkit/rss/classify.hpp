#pragma once

// Branch-free three-splitter classification. Every lane keeps its state in
// named locals so the compiler can hold it in registers.

#include <cstddef>
#include <cstdint>
#include <string>

#include "sortkit/errors.hpp"
#include "sortkit/sort_item.hpp"

namespace sortkit::rss {

struct SplitterSet {
    std::uint64_t low = 0;
    std::uint64_t mid = 0;
    std::uint64_t high = 0;

    friend constexpr bool operator==(const SplitterSet&, const SplitterSet&) = default;
};

/// Strict key comparison used by the classifier; swappable for counting.
struct SplitterLess {
    constexpr bool operator()(std::uint64_t a, std::uint64_t b) const noexcept { return a < b; }
};

namespace detail {

constexpr std::uint64_t mask_select(std::uint64_t c, std::uint64_t if_set, std::uint64_t if_clear) noexcept {
    return if_clear ^ ((if_clear ^ if_set) & (std::uint64_t{0} - c));
}

}  // namespace detail

/// Bucket 0..3: 2 * [mid < key] + [(mid < key ? high : low) < key].
template <typename Less = SplitterLess>
constexpr std::uint8_t classify_element(std::uint64_t key, const SplitterSet& s, Less less = {}) noexcept {
    const std::uint64_t cmp = less(s.mid, key);
    const std::uint64_t sx = detail::mask_select(cmp, s.high, s.low);
    const std::uint64_t index = (cmp << 1) + static_cast<std::uint64_t>(less(sx, key));
    return static_cast<std::uint8_t>(index);
}

namespace detail {

#define SORTKIT_RSS_LANE(k, stmt) \
    if constexpr (B > (k)) {      \
        stmt;                     \
    }

template <std::size_t B, typename Less>
void classify_lanes(const SortItem* items, std::size_t n, const SplitterSet& s, std::uint8_t* out,
                    std::size_t* counts, Less less) {
    const std::uint64_t s0 = s.low;
    const std::uint64_t s1 = s.mid;
    const std::uint64_t s2 = s.high;
    std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    std::size_t i = 0;
    for (; i + B <= n; i += B) {
        std::uint64_t e0, e1, e2, e3, e4;
        std::uint64_t p0, p1, p2, p3, p4;
        std::uint64_t x0, x1, x2, x3, x4;
        (void)e1, (void)e2, (void)e3, (void)e4, (void)p1, (void)p2, (void)p3, (void)p4;
        (void)x1, (void)x2, (void)x3, (void)x4;
        SORTKIT_RSS_LANE(0, e0 = items[i + 0].key)
        SORTKIT_RSS_LANE(1, e1 = items[i + 1].key)
        SORTKIT_RSS_LANE(2, e2 = items[i + 2].key)
        SORTKIT_RSS_LANE(3, e3 = items[i + 3].key)
        SORTKIT_RSS_LANE(4, e4 = items[i + 4].key)
        SORTKIT_RSS_LANE(0, p0 = less(s1, e0))
        SORTKIT_RSS_LANE(1, p1 = less(s1, e1))
        SORTKIT_RSS_LANE(2, p2 = less(s1, e2))
        SORTKIT_RSS_LANE(3, p3 = less(s1, e3))
        SORTKIT_RSS_LANE(4, p4 = less(s1, e4))
        SORTKIT_RSS_LANE(0, x0 = mask_select(p0, s2, s0))
        SORTKIT_RSS_LANE(1, x1 = mask_select(p1, s2, s0))
        SORTKIT_RSS_LANE(2, x2 = mask_select(p2, s2, s0))
        SORTKIT_RSS_LANE(3, x3 = mask_select(p3, s2, s0))
        SORTKIT_RSS_LANE(4, x4 = mask_select(p4, s2, s0))
        // p now becomes the bucket index
        SORTKIT_RSS_LANE(0, p0 = (p0 << 1) + static_cast<std::uint64_t>(less(x0, e0)))
        SORTKIT_RSS_LANE(1, p1 = (p1 << 1) + static_cast<std::uint64_t>(less(x1, e1)))
        SORTKIT_RSS_LANE(2, p2 = (p2 << 1) + static_cast<std::uint64_t>(less(x2, e2)))
        SORTKIT_RSS_LANE(3, p3 = (p3 << 1) + static_cast<std::uint64_t>(less(x3, e3)))
        SORTKIT_RSS_LANE(4, p4 = (p4 << 1) + static_cast<std::uint64_t>(less(x4, e4)))
        SORTKIT_RSS_LANE(0, out[i + 0] = static_cast<std::uint8_t>(p0))
        SORTKIT_RSS_LANE(1, out[i + 1] = static_cast<std::uint8_t>(p1))
        SORTKIT_RSS_LANE(2, out[i + 2] = static_cast<std::uint8_t>(p2))
        SORTKIT_RSS_LANE(3, out[i + 3] = static_cast<std::uint8_t>(p3))
        SORTKIT_RSS_LANE(4, out[i + 4] = static_cast<std::uint8_t>(p4))
    }
    for (; i < n; ++i) out[i] = classify_element(items[i].key, s, less);
    if (counts != nullptr) {
        for (std::size_t j = 0; j < n; ++j) {
            c0 += out[j] == 0;
            c1 += out[j] == 1;
            c2 += out[j] == 2;
            c3 += out[j] == 3;
        }
        counts[0] = c0;
        counts[1] = c1;
        counts[2] = c2;
        counts[3] = c3;
    }
}

#undef SORTKIT_RSS_LANE

}  // namespace detail

/// Classifies items[0, n) into out[0, n) in blocks of block_size interleaved
/// lanes followed by a scalar tail. If counts is non-null it receives the four
/// bucket sizes. Throws ConfigurationError for block_size outside 1..5.
template <typename Less = SplitterLess>
void classify_block(const SortItem* items, std::size_t n, const SplitterSet& s, std::size_t block_size,
                    std::uint8_t* out, std::size_t* counts = nullptr, Less less = {}) {
    switch (block_size) {
        case 1: detail::classify_lanes<1>(items, n, s, out, counts, less); return;
        case 2: detail::classify_lanes<2>(items, n, s, out, counts, less); return;
        case 3: detail::classify_lanes<3>(items, n, s, out, counts, less); return;
        case 4: detail::classify_lanes<4>(items, n, s, out, counts, less); return;
        case 5: detail::classify_lanes<5>(items, n, s, out, counts, less); return;
        default: throw ConfigurationError("block size must be in 1..5, got " + std::to_string(block_size));
    }
}

/// Values live at once during classification: three splitters, three per
/// lane (index, predicate result, selected splitter) and three fixed ones
/// (bucket pointer, current element index, element count).
constexpr std::size_t register_budget(std::size_t block_size) noexcept {
    return 3 + 3 * block_size + 3;
}

}  // namespace sortkit::rss
