#include <vector>

#include "sortkit/networks/network.hpp"

namespace sortkit::networks {
namespace {

using Sink = std::vector<Comparator>;

void emit(Sink& out, std::size_t i, std::size_t j) {
    out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
}

// Merges sorted runs [i, i+x) and [j, j+y).
void merge(Sink& out, std::size_t i, std::size_t x, std::size_t j, std::size_t y) {
    if (x == 1 && y == 1) {
        emit(out, i, j);
    } else if (x == 1 && y == 2) {
        emit(out, i, j + 1);
        emit(out, i, j);
    } else if (x == 2 && y == 1) {
        emit(out, i, j);
        emit(out, i + 1, j);
    } else {
        const std::size_t a = x / 2;
        const std::size_t b = (x & 1) ? y / 2 : (y + 1) / 2;
        merge(out, i, a, j, b);
        merge(out, i + a, x - a, j + b, y - b);
        merge(out, i + a, x - a, j, b);
    }
}

void sort_range(Sink& out, std::size_t i, std::size_t m) {
    if (m < 2) return;
    const std::size_t a = m / 2;
    sort_range(out, i, a);
    sort_range(out, i + a, m - a);
    merge(out, i, a, i + a, m - a);
}

}  // namespace

Network generate_bose_nelson(std::size_t n) {
    Sink out;
    sort_range(out, 0, n);
    return Network(n, std::move(out), NetworkFamily::BoseNelsonLocality);
}

std::vector<Comparator> bose_nelson_merger(std::size_t first, std::size_t second) {
    Sink out;
    if (first > 0 && second > 0) merge(out, 0, first, first, second);
    return out;
}

}  // namespace sortkit::networks
