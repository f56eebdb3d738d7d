#include <array>
#include <string_view>

#include "sortkit/errors.hpp"
#include "sortkit/networks/network.hpp"
#include "sortkit/networks/table_format.hpp"

namespace sortkit::networks {
namespace detail {
extern const std::array<std::string_view, 15> kBestTableText;
}  // namespace detail

namespace {

std::array<Network, 15> parse_all() {
    std::array<Network, 15> nets;
    for (std::size_t i = 0; i < nets.size(); ++i) {
        nets[i] = parse_table(detail::kBestTableText[i], NetworkFamily::Best);
        if (nets[i].channels() != i + 2) {
            throw std::logic_error("embedded best network table " + std::to_string(i) + " has wrong channel count");
        }
    }
    return nets;
}

}  // namespace

const Network& best_network(std::size_t n) {
    if (n < 2 || n > 16) throw UnsupportedSize(n, "best networks cover 2..16");
    static const std::array<Network, 15> nets = parse_all();
    return nets[n - 2];
}

}  // namespace sortkit::networks
