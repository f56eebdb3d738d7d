#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "sortkit/networks/network.hpp"

namespace sortkit::networks {

LeveledNetwork compute_levels(const Network& net) {
    LeveledNetwork out;
    out.n = net.channels();
    // last_level[c] = 1-based level of the latest comparator touching c, 0 if none
    std::vector<std::size_t> last_level(net.channels(), 0);
    for (const auto& c : net.comparators()) {
        const std::size_t level = std::max(last_level[c.low], last_level[c.high]) + 1;
        last_level[c.low] = last_level[c.high] = level;
        if (out.levels.size() < level) out.levels.resize(level);
        out.levels[level - 1].push_back(c);
    }
    return out;
}

std::size_t depth(const Network& net) { return compute_levels(net).depth(); }

Network reorder_parallelism(const Network& net) {
    const auto leveled = compute_levels(net);
    std::vector<Comparator> flat;
    flat.reserve(net.size());
    for (const auto& level : leveled.levels) flat.insert(flat.end(), level.begin(), level.end());
    return Network(net.channels(), std::move(flat), NetworkFamily::BoseNelsonParallel);
}

std::size_t sequential_depth(const Network& net) {
    std::size_t levels = 0;
    std::vector<bool> used(net.channels(), false);
    bool open = false;
    for (const auto& c : net.comparators()) {
        if (!open || used[c.low] || used[c.high]) {
            std::fill(used.begin(), used.end(), false);
            ++levels;
            open = true;
        }
        used[c.low] = used[c.high] = true;
    }
    return levels;
}

std::vector<std::vector<Comparator>> channel_sequences(const Network& net) {
    std::vector<std::vector<Comparator>> seq(net.channels());
    for (const auto& c : net.comparators()) {
        seq[c.low].push_back(c);
        seq[c.high].push_back(c);
    }
    return seq;
}

Network reorder_locality(const Network& net) {
    const Network reference = generate_bose_nelson(net.channels());
    if (reference.size() != net.size()) {
        throw std::invalid_argument("reorder_locality: input is not a Bose-Nelson network");
    }
    // The k-th occurrence of a comparator in the input is matched to its k-th
    // occurrence in the reference; the reference order is the result.
    std::map<Comparator, std::size_t> pending;
    for (const auto& c : net.comparators()) ++pending[c];
    for (const auto& c : reference.comparators()) {
        auto it = pending.find(c);
        if (it == pending.end() || it->second == 0) {
            throw std::invalid_argument("reorder_locality: input is not a Bose-Nelson network");
        }
        --it->second;
    }
    Network out = reference.with_ordering(NetworkFamily::BoseNelsonLocality);
    if (channel_sequences(out) != channel_sequences(net)) {
        throw std::invalid_argument("reorder_locality: input order violates the Bose-Nelson dependencies");
    }
    return out;
}

}  // namespace sortkit::networks
