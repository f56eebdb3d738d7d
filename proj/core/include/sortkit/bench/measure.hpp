#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sortkit/bench/check.hpp"
#include "sortkit/bench/random.hpp"
#include "sortkit/bench/timer.hpp"
#include "sortkit/errors.hpp"
#include "sortkit/lcg.hpp"

namespace sortkit::bench {

struct MeasurementRecord {
    std::string sorter;
    std::size_t array_size = 0;
    std::size_t measure_index = 0;
    double cost = 0.0;  ///< per sort; may be negative
    TimerKind timer_kind = TimerKind::Cycles;

    friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

enum class LoopKind : std::uint8_t { OneArrayRepeat, ArrayInRow };

constexpr std::string_view loop_kind_label(LoopKind k) noexcept {
    return k == LoopKind::OneArrayRepeat ? "one-array-repeat" : "array-in-row";
}

struct OneArrayRepeatParams {
    std::size_t array_size = 8;
    std::size_t iterations = 100;
    std::size_t measures = 500;
};

struct ArrayInRowParams {
    std::size_t array_size = 8;
    std::size_t number_of_arrays = 0;  ///< 0: smallest count exceeding cache_bytes
    std::size_t measures = 10;
    std::size_t cache_bytes = std::size_t{32} << 20;
};

/// Per-measure input seeds, derived from the master seed by LCG steps.
class SeedSource {
public:
    explicit SeedSource(std::uint64_t master) noexcept : rng_(Lcg::from_u64(master)) {}

    std::uint32_t next() noexcept { return static_cast<std::uint32_t>(rng_()); }

private:
    Lcg rng_;
};

struct LoopDiagnostics {
    std::uint64_t timed_sorts = 0;
    std::uint64_t simulated_checks = 0;
};

/// Default array count: just enough items to exceed cache_bytes.
constexpr std::size_t default_number_of_arrays(std::size_t array_size, std::size_t cache_bytes) noexcept {
    return cache_bytes / (array_size * sizeof(SortItem)) + 1;
}

void validate(const OneArrayRepeatParams& p);
void validate(const ArrayInRowParams& p);

namespace detail {

inline double per_sort(std::uint64_t t, std::uint64_t iterations) noexcept {
    return static_cast<double>(t) / static_cast<double>(iterations);
}

}  // namespace detail

/// Two-phase loop on one reused array. Phase one times fill, fingerprint,
/// sort and check; phase two replays the same inputs and times only fill and a
/// check whose result is discarded. Cost = (phase1 - phase2) / iterations.
/// Throws CorrectnessFailure carrying the measure's seed.
template <typename Sorter>
std::vector<MeasurementRecord> one_array_repeat(const std::string& label, Sorter&& sort,
                                                const OneArrayRepeatParams& p, SeedSource& seeds,
                                                LoopDiagnostics* diag = nullptr) {
    validate(p);
    std::vector<MeasurementRecord> out;
    out.reserve(p.measures);
    std::vector<SortItem> buffer(p.array_size);
    const std::span<SortItem> items(buffer);
    volatile std::uint64_t sink = 0;
    std::uint64_t simulated = 0;

    for (std::size_t m = 0; m < p.measures; ++m) {
        const std::uint32_t seed = seeds.next();
        Lcg rng(seed);

        // warm-up, also checks once outside the timed region
        fill_random(items, rng);
        const Fingerprint before = fingerprint(items);
        sort(items.data(), items.size());
        if (!check_sorted(items)) throw CorrectnessFailure(label, p.array_size, seed, "output not sorted");
        if (fingerprint(items, before.z_used).v != before.v) {
            throw CorrectnessFailure(label, p.array_size, seed, "output is not a permutation of the input");
        }

        rng = Lcg(seed);
        bool ok = true;
        const std::uint64_t t0 = Timer::now();
        for (std::size_t it = 0; it < p.iterations; ++it) {
            fill_random(items, rng);
            const Fingerprint fp = fingerprint(items);
            sort(items.data(), items.size());
            ok &= check_sorted(items);
            ok &= fingerprint_product(items, fp.z_used, kFingerprintPrime) == fp.v;
        }
        const std::uint64_t t1 = Timer::now();
        if (!ok) throw CorrectnessFailure(label, p.array_size, seed, "unsorted or altered output in timed loop");

        rng = Lcg(seed);
        const std::uint64_t t2 = Timer::now();
        for (std::size_t it = 0; it < p.iterations; ++it) {
            fill_random(items, rng);
            const Fingerprint fp = fingerprint(items);
            const bool sorted = check_sorted(items);
            const bool same = fingerprint_product(items, fp.z_used, kFingerprintPrime) == fp.v;
            sink = sink + static_cast<std::uint64_t>(sorted) + static_cast<std::uint64_t>(same);
            ++simulated;
        }
        const std::uint64_t t3 = Timer::now();

        const double phase1 = detail::per_sort(t1 - t0, p.iterations);
        const double phase2 = detail::per_sort(t3 - t2, p.iterations);
        out.push_back({label, p.array_size, m, phase1 - phase2, Timer::kind()});
    }
    if (simulated != p.measures * p.iterations) {
        throw std::logic_error("simulated check loop did not execute every iteration");
    }
    if (diag != nullptr) {
        diag->timed_sorts += p.measures * p.iterations;
        diag->simulated_checks += simulated;
    }
    return out;
}

/// Sorts consecutive disjoint subarrays of one array larger than the cache in
/// a single timed sweep, then checks every subarray against a reference copy.
/// Cost = sweep time / number of arrays.
template <typename Sorter>
std::vector<MeasurementRecord> array_in_row(const std::string& label, Sorter&& sort, const ArrayInRowParams& p,
                                            SeedSource& seeds, LoopDiagnostics* diag = nullptr) {
    validate(p);
    const std::size_t arrays =
        p.number_of_arrays != 0 ? p.number_of_arrays : default_number_of_arrays(p.array_size, p.cache_bytes);
    const std::size_t n = p.array_size;
    std::vector<MeasurementRecord> out;
    out.reserve(p.measures);
    std::vector<SortItem> data(arrays * n);
    std::vector<SortItem> reference;

    const auto by_key_ref = [](const SortItem& a, const SortItem& b) {
        return a.key != b.key ? a.key < b.key : a.ref < b.ref;
    };

    for (std::size_t m = 0; m < p.measures; ++m) {
        const std::uint32_t seed = seeds.next();
        fill_random(data, seed);
        reference = data;
        for (std::size_t a = 0; a < arrays; ++a) {
            std::sort(reference.begin() + a * n, reference.begin() + (a + 1) * n, by_key_ref);
        }
        for (std::size_t a = 0; a < arrays; ++a) sort(data.data() + a * n, n);  // warm-up round
        fill_random(data, seed);

        const std::uint64_t t0 = Timer::now();
        for (std::size_t a = 0; a < arrays; ++a) sort(data.data() + a * n, n);
        const std::uint64_t t1 = Timer::now();

        for (std::size_t a = 0; a < arrays; ++a) {
            const auto first = data.begin() + a * n;
            if (!check_sorted(std::span<const SortItem>(&*first, n))) {
                throw CorrectnessFailure(label, n, seed, "subarray " + std::to_string(a) + " not sorted");
            }
            std::sort(first, first + n, by_key_ref);  // normalize ties for comparison
            if (!std::equal(first, first + n, reference.begin() + a * n)) {
                throw CorrectnessFailure(label, n, seed, "subarray " + std::to_string(a) + " differs from reference");
            }
        }
        out.push_back({label, n, m, detail::per_sort(t1 - t0, arrays), Timer::kind()});
        if (diag != nullptr) diag->timed_sorts += arrays;
    }
    return out;
}

}  // namespace sortkit::bench
