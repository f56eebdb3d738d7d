#include "sortkit/rss/config.hpp"

#include "sortkit/errors.hpp"
#include "sortkit/lcg.hpp"
#include "sortkit/smallsort/small_sort.hpp"

namespace sortkit::rss {

void RssConfig::validate() const {
    if (num_splitters != kNumSplitters) {
        throw ConfigurationError("RSS uses exactly 3 splitters, got " + std::to_string(num_splitters));
    }
    if (oversampling < 1) throw ConfigurationError("RSS oversampling factor must be at least 1");
    if (block_size < kMinBlockSize || block_size > kMaxBlockSize) {
        throw ConfigurationError("RSS block size must be in 1..5, got " + std::to_string(block_size));
    }
    if (base_case_threshold < 1) throw ConfigurationError("RSS base case threshold must be at least 1");
    if (is_network(base_sorter) && base_case_threshold > small::kMaxNetworkSize) {
        throw ConfigurationError("RSS base case threshold " + std::to_string(base_case_threshold) +
                                 " exceeds the network sorter limit of 16");
    }
    if (sample_seed == 0 || sample_seed >= kLcgModulus) {
        throw ConfigurationError("RSS sample seed must be in [1, 2147483646]");
    }
}

RssConfig parse_rss_config(std::string_view xyz) {
    if (xyz.size() != 3 || xyz.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ConfigurationError("RSS config must be three digits 'xyz', got '" + std::string(xyz) + "'");
    }
    RssConfig cfg;
    cfg.num_splitters = static_cast<std::size_t>(xyz[0] - '0');
    cfg.oversampling = static_cast<std::size_t>(xyz[1] - '0');
    cfg.block_size = static_cast<std::size_t>(xyz[2] - '0');
    cfg.validate();
    return cfg;
}

std::string rss_config_code(const RssConfig& cfg) {
    return std::to_string(cfg.num_splitters) + std::to_string(cfg.oversampling) + std::to_string(cfg.block_size);
}

}  // namespace sortkit::rss
