#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace sortkit {

/// State of the multiplicative LCG seed = seed * 48271 mod (2^31 - 1),
/// i.e. the minstd_rand recurrence. Valid seeds are 1 .. 2^31 - 2.
struct LcgState {
    std::uint32_t seed = 1;
};

inline constexpr std::uint64_t kLcgMultiplier = 48271;
inline constexpr std::uint64_t kLcgModulus = 2147483647;

constexpr bool is_valid(LcgState s) noexcept {
    return s.seed != 0 && s.seed < kLcgModulus;
}

/// One step; the returned value is the new seed zero-extended to 64 bits.
constexpr std::pair<LcgState, std::uint64_t> lcg_next(LcgState s) noexcept {
    const auto next = static_cast<std::uint32_t>((std::uint64_t{s.seed} * kLcgMultiplier) % kLcgModulus);
    return {LcgState{next}, next};
}

class Lcg {
public:
    constexpr Lcg() = default;

    explicit constexpr Lcg(std::uint32_t seed) : state_{seed} {
        if (!is_valid(state_)) {
            throw std::invalid_argument("LCG seed must be in [1, 2147483646]");
        }
    }

    /// Maps any 64-bit value onto the valid seed range.
    static constexpr Lcg from_u64(std::uint64_t value) noexcept {
        Lcg g;
        g.state_.seed = static_cast<std::uint32_t>(value % (kLcgModulus - 1) + 1);
        return g;
    }

    constexpr std::uint64_t operator()() noexcept {
        auto [s, v] = lcg_next(state_);
        state_ = s;
        return v;
    }

    constexpr LcgState state() const noexcept { return state_; }
    constexpr std::uint32_t seed() const noexcept { return state_.seed; }

private:
    LcgState state_{};
};

}  // namespace sortkit
