#include "sortkit/networks/network.hpp"

#include <stdexcept>
#include <string>

#include "sortkit/errors.hpp"

namespace sortkit::networks {

std::string_view family_label(NetworkFamily f) noexcept {
    switch (f) {
        case NetworkFamily::Best: return "Best";
        case NetworkFamily::BoseNelsonLocality: return "BN-L";
        case NetworkFamily::BoseNelsonParallel: return "BN-P";
        case NetworkFamily::BoseNelsonRecursive: return "BN-R";
    }
    return "?";
}

std::string_view family_slug(NetworkFamily f) noexcept {
    switch (f) {
        case NetworkFamily::Best: return "best";
        case NetworkFamily::BoseNelsonLocality: return "bn-l";
        case NetworkFamily::BoseNelsonParallel: return "bn-p";
        case NetworkFamily::BoseNelsonRecursive: return "bn-r";
    }
    return "?";
}

std::optional<NetworkFamily> parse_family(std::string_view text) noexcept {
    for (auto f : kAllFamilies) {
        if (text == family_label(f) || text == family_slug(f)) return f;
    }
    return std::nullopt;
}

Network::Network(std::size_t n, std::vector<Comparator> comparators, NetworkFamily ordering)
    : n_(n), comparators_(std::move(comparators)), ordering_(ordering) {
    if (n_ > kMaxChannels) {
        throw UnsupportedSize(n_, "networks support at most 32 channels");
    }
    for (const auto& c : comparators_) {
        if (!(c.low < c.high) || c.high >= n_) {
            throw std::invalid_argument("invalid comparator (" + std::to_string(c.low) + ", " +
                                        std::to_string(c.high) + ") for " + std::to_string(n_) + " channels");
        }
    }
}

Network family_network(NetworkFamily family, std::size_t n) {
    switch (family) {
        case NetworkFamily::Best:
            return best_network(n);
        case NetworkFamily::BoseNelsonLocality:
            return generate_bose_nelson(n).with_ordering(NetworkFamily::BoseNelsonLocality);
        case NetworkFamily::BoseNelsonParallel:
            return reorder_parallelism(generate_bose_nelson(n));
        case NetworkFamily::BoseNelsonRecursive:
            return generate_bose_nelson(n).with_ordering(NetworkFamily::BoseNelsonRecursive);
    }
    throw std::invalid_argument("unknown network family");
}

}  // namespace sortkit::networks
