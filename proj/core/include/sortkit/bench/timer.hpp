#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace sortkit::bench {

enum class TimerKind : std::uint8_t { Cycles, Nanos };

constexpr std::string_view timer_kind_label(TimerKind k) noexcept {
    return k == TimerKind::Cycles ? "cycles" : "nanos";
}

constexpr std::optional<TimerKind> parse_timer_kind(std::string_view text) noexcept {
    if (text == "cycles") return TimerKind::Cycles;
    if (text == "nanos") return TimerKind::Nanos;
    return std::nullopt;
}

/// Monotonic cost source: the time stamp counter on x86-64, the steady clock
/// in nanoseconds elsewhere.
class Timer {
public:
    static TimerKind kind() noexcept;
    static std::uint64_t now() noexcept;
};

}  // namespace sortkit::bench
