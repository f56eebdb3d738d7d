#include "sortkit/bench/report.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sortkit/bench/records_csv.hpp"

namespace sortkit::bench {

namespace {

std::vector<std::size_t> sizes_of(const std::vector<RankingRow>& rows) {
    std::vector<std::size_t> sizes;
    if (!rows.empty()) {
        for (const auto& [size, cost] : rows.front().cost) sizes.push_back(size);
    }
    return sizes;
}

}  // namespace

std::string ranking_csv(const std::vector<RankingRow>& rows) {
    const auto sizes = sizes_of(rows);
    std::string out = "Rank,Sorter,GeoM";
    for (auto s : sizes) out += fmt::format(",{}", s);
    out += '\n';
    for (const auto& r : rows) {
        out += fmt::format("{},{},{}", r.rank, csv_field(r.sorter), r.geomean);
        for (auto s : sizes) out += fmt::format(",{}", r.cost.at(s));
        out += '\n';
    }
    return out;
}

std::string ranking_text(const std::vector<RankingRow>& rows) {
    const auto sizes = sizes_of(rows);
    std::size_t label_w = 6;
    for (const auto& r : rows) label_w = std::max(label_w, r.sorter.size());
    std::string out = fmt::format("{:>4}  {:<{}}  {:>7}", "Rank", "Sorter", label_w, "GeoM");
    for (auto s : sizes) out += fmt::format("  {:>10}", s);
    out += '\n';
    for (const auto& r : rows) {
        out += fmt::format("{:>4}  {:<{}}  {:>7.3f}", r.rank, r.sorter, label_w, r.geomean);
        for (auto s : sizes) {
            const bool best = std::find(r.best_at.begin(), r.best_at.end(), s) != r.best_at.end();
            out += fmt::format("  {:>9.2f}{}", r.cost.at(s), best ? '*' : ' ');
        }
        out += '\n';
    }
    return out;
}

std::string speedup_csv(const SpeedupTable& table) {
    std::string out = "array_size,best_network,best_insertion,speedup\n";
    for (const auto& r : table.rows) {
        out += fmt::format("{},{},{},{}\n", r.array_size, csv_field(r.best_network), csv_field(r.best_insertion),
                           r.speedup);
    }
    out += fmt::format("Avg,,,{}\n", table.average);
    return out;
}

std::string speedup_text(const SpeedupTable& table) {
    std::size_t net_w = 12, is_w = 14;
    for (const auto& r : table.rows) {
        net_w = std::max(net_w, r.best_network.size());
        is_w = std::max(is_w, r.best_insertion.size());
    }
    std::string out =
        fmt::format("{:>5}  {:<{}}  {:<{}}  {:>7}\n", "Size", "Best network", net_w, "Best insertion", is_w, "Speedup");
    for (const auto& r : table.rows) {
        out += fmt::format("{:>5}  {:<{}}  {:<{}}  {:>7.3f}\n", r.array_size, r.best_network, net_w, r.best_insertion,
                           is_w, r.speedup);
    }
    out += fmt::format("{:>5}  {:<{}}  {:<{}}  {:>7.3f}\n", "Avg", "", net_w, "", is_w, table.average);
    return out;
}

}  // namespace sortkit::bench
