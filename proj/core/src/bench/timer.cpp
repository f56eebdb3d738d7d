#include "sortkit/bench/timer.hpp"

#include <chrono>

#if defined(__x86_64__)
#include <x86intrin.h>
#endif

namespace sortkit::bench {

TimerKind Timer::kind() noexcept {
#if defined(__x86_64__)
    return TimerKind::Cycles;
#else
    return TimerKind::Nanos;
#endif
}

std::uint64_t Timer::now() noexcept {
#if defined(__x86_64__)
    _mm_lfence();
    const std::uint64_t t = __rdtsc();
    _mm_lfence();
    return t;
#else
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
            .count());
#endif
}

}  // namespace sortkit::bench
