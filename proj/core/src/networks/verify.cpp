#include <array>
#include <cstdint>

#include "sortkit/errors.hpp"
#include "sortkit/networks/network.hpp"

namespace sortkit::networks {
namespace {

// Bit-sliced evaluation: lane l of word v[c] holds channel c of input
// number (batch * 64 + l). Channels 0..5 follow fixed bit patterns inside a
// batch; higher channels are constant across the batch.
constexpr std::array<std::uint64_t, 6> kLanePattern = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

bool verify_zero_one(const Network& net) {
    const std::size_t n = net.channels();
    if (n > kMaxExhaustiveChannels) throw TooLargeForExhaustive(n);
    if (n < 2) return true;

    const std::uint64_t lane_mask = n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    const std::uint64_t batches = n > 6 ? (std::uint64_t{1} << (n - 6)) : 1;

    std::array<std::uint64_t, kMaxExhaustiveChannels> v{};
    for (std::uint64_t batch = 0; batch < batches; ++batch) {
        for (std::size_t c = 0; c < n; ++c) {
            v[c] = c < 6 ? kLanePattern[c] : (((batch >> (c - 6)) & 1) ? ~std::uint64_t{0} : 0);
        }
        for (const auto& cmp : net.comparators()) {
            const std::uint64_t a = v[cmp.low];
            const std::uint64_t b = v[cmp.high];
            v[cmp.low] = a & b;
            v[cmp.high] = a | b;
        }
        // sorted iff no lane has a 1 on channel c followed by a 0 on c+1
        std::uint64_t bad = 0;
        for (std::size_t c = 0; c + 1 < n; ++c) bad |= v[c] & ~v[c + 1];
        if (bad & lane_mask) return false;
    }
    return true;
}

}  // namespace sortkit::networks
