#include "sortkit/bench/check.hpp"

#include <stdexcept>

namespace sortkit::bench {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    const u128 prod = static_cast<u128>(a) * b;
    if (p == kFingerprintPrime) {
        // 2^61 = 1 (mod p)
        std::uint64_t r = (static_cast<std::uint64_t>(prod) & p) + static_cast<std::uint64_t>(prod >> 61);
        r = (r & p) + (r >> 61);
        return r == p ? 0 : r;
    }
    return static_cast<std::uint64_t>(prod % p);
}

}  // namespace

std::uint64_t fingerprint_product(std::span<const SortItem> items, std::uint64_t z, std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("fingerprint modulus out of range");
    const std::uint64_t zm = z % p;
    std::uint64_t v = 1 % p;
    for (const auto& item : items) {
        v = mulmod(v, (zm + p - item.key % p) % p, p);
    }
    return v;
}

Fingerprint fingerprint(std::span<const SortItem> items, std::uint64_t z, std::uint64_t p) {
    std::uint64_t v = fingerprint_product(items, z, p);
    while (v == 0) v = fingerprint_product(items, ++z, p);
    return {v, z};
}

bool check_sorted(std::span<const SortItem> items) noexcept {
    bool ok = true;
    for (std::size_t i = 1; i < items.size(); ++i) ok &= items[i - 1].key <= items[i].key;
    return ok;
}

}  // namespace sortkit::bench
