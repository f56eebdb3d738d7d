#include "sortkit/smallsort/sorter_id.hpp"

#include <sstream>
#include <vector>

#include "sortkit/errors.hpp"

namespace sortkit {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

}  // namespace

std::string small_sorter_label(const SmallSorterId& id) {
    if (const auto* net = std::get_if<NetworkSorterId>(&id)) {
        return "SN " + std::string(networks::family_label(net->family)) + " " + std::string(swap_label(net->swap));
    }
    return "IS " + std::string(insertion_label(std::get<InsertionVariant>(id)));
}

SmallSorterId parse_small_sorter(std::string_view label) {
    const auto tokens = split_ws(label);
    if (tokens.size() == 3 && tokens[0] == "SN") {
        const auto swap = parse_swap_label(tokens[2]);
        if (!swap) throw ConfigurationError("unknown swap strategy '" + tokens[2] + "' in '" + std::string(label) + "'");
        const auto family = networks::parse_family(tokens[1]);
        if (!family) throw ConfigurationError("unknown network family '" + tokens[1] + "' in '" + std::string(label) + "'");
        return NetworkSorterId{*family, *swap};
    }
    if (tokens.size() == 2 && tokens[0] == "IS") {
        if (const auto v = parse_insertion_label(tokens[1])) return *v;
        throw ConfigurationError("unknown insertion sort variant '" + tokens[1] + "'");
    }
    throw ConfigurationError("unrecognized small sorter '" + std::string(label) +
                             "' (expected 'SN <family> <swap>' or 'IS <variant>')");
}

std::vector<SmallSorterId> all_small_sorters() {
    std::vector<SmallSorterId> out;
    for (auto family : networks::kAllFamilies) {
        for (auto swap : kAllSwapStrategies) out.emplace_back(NetworkSorterId{family, swap});
    }
    for (auto v : kAllInsertionVariants) out.emplace_back(v);
    return out;
}

}  // namespace sortkit
