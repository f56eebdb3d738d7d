#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "sortkit/smallsort/sorter_id.hpp"

namespace sortkit::rss {

inline constexpr std::size_t kNumSplitters = 3;
inline constexpr std::size_t kNumBuckets = kNumSplitters + 1;
inline constexpr std::size_t kMinBlockSize = 1;
inline constexpr std::size_t kMaxBlockSize = 5;

struct RssConfig {
    std::size_t num_splitters = kNumSplitters;
    std::size_t oversampling = 3;
    std::size_t block_size = 2;
    std::size_t base_case_threshold = 16;
    SmallSorterId base_sorter = NetworkSorterId{};
    std::uint32_t sample_seed = 1;

    /// Throws ConfigurationError if any field is out of range, or if a
    /// network base sorter is paired with a threshold above 16.
    void validate() const;

    /// Sample size a * 4.
    std::size_t sample_size() const noexcept { return oversampling * kNumBuckets; }
};

/// Parses the three-digit "xyz" label: x splitters (must be 3), y oversampling
/// (1..9), z block size (1..5). Other fields keep their defaults.
RssConfig parse_rss_config(std::string_view xyz);

/// "332"
std::string rss_config_code(const RssConfig& cfg);

}  // namespace sortkit::rss
