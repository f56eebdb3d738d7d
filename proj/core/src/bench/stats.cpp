#include "sortkit/bench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace sortkit::bench {

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw EmptySample();
    const double h = static_cast<double>(sorted.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxStats boxplot_stats(std::span<const double> samples) {
    if (samples.empty()) throw EmptySample();
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());
    BoxStats b;
    b.q1 = quantile_sorted(s, 0.25);
    b.median = quantile_sorted(s, 0.5);
    b.q3 = quantile_sorted(s, 0.75);
    b.iqr = b.q3 - b.q1;
    const double lo_fence = b.q1 - 1.5 * b.iqr;
    const double hi_fence = b.q3 + 1.5 * b.iqr;
    // q1 and q3 lie within the sample range, so both searches succeed.
    b.whisker_lo = *std::find_if(s.begin(), s.end(), [&](double x) { return x >= lo_fence; });
    b.whisker_hi = *std::find_if(s.rbegin(), s.rend(), [&](double x) { return x <= hi_fence; });
    for (double x : s) {
        if (x < b.whisker_lo || x > b.whisker_hi) b.outliers.push_back(x);
    }
    return b;
}

std::map<std::string, std::map<std::size_t, std::vector<double>>> group_costs(
    std::span<const MeasurementRecord> records) {
    std::map<std::string, std::map<std::size_t, std::vector<double>>> g;
    for (const auto& r : records) g[r.sorter][r.array_size].push_back(r.cost);
    return g;
}

CostTable summarize(std::span<const MeasurementRecord> records, Aggregate how) {
    CostTable t;
    for (auto& [sorter, by_size] : group_costs(records)) {
        for (auto& [size, costs] : by_size) {
            double v = 0;
            if (how == Aggregate::Mean) {
                v = std::accumulate(costs.begin(), costs.end(), 0.0) / static_cast<double>(costs.size());
            } else {
                std::sort(costs.begin(), costs.end());
                v = quantile_sorted(costs, 0.5);
            }
            t[sorter][size] = v;
        }
    }
    return t;
}

namespace {

std::set<std::size_t> all_sizes(const CostTable& table) {
    std::set<std::size_t> sizes;
    for (const auto& [sorter, by_size] : table) {
        for (const auto& [size, cost] : by_size) sizes.insert(size);
    }
    return sizes;
}

}  // namespace

std::vector<RankingRow> rank_by_geomean(const CostTable& table) {
    const auto sizes = all_sizes(table);
    std::vector<IncompleteGrid::Cell> missing;
    for (const auto& [sorter, by_size] : table) {
        for (std::size_t size : sizes) {
            if (!by_size.contains(size)) missing.emplace_back(sorter, size);
        }
    }
    if (!missing.empty()) throw IncompleteGrid(std::move(missing));

    std::map<std::size_t, double> best;
    for (std::size_t size : sizes) {
        double b = INFINITY;
        for (const auto& [sorter, by_size] : table) {
            const double c = by_size.at(size);
            if (!(c > 0)) {
                throw ConfigurationError("cannot rank non-positive cost " + std::to_string(c) + " for (" + sorter +
                                         ", " + std::to_string(size) + ")");
            }
            b = std::min(b, c);
        }
        best[size] = b;
    }

    std::vector<RankingRow> rows;
    for (const auto& [sorter, by_size] : table) {
        RankingRow row;
        row.sorter = sorter;
        row.cost = by_size;
        double log_sum = 0;
        for (std::size_t size : sizes) {
            const double s = by_size.at(size) / best[size];
            row.slowdown[size] = s;
            log_sum += std::log(s);
            if (by_size.at(size) == best[size]) row.best_at.push_back(size);
        }
        row.geomean = sizes.empty() ? 1.0 : std::exp(log_sum / static_cast<double>(sizes.size()));
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const RankingRow& a, const RankingRow& b) {
        return a.geomean != b.geomean ? a.geomean < b.geomean : a.sorter < b.sorter;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
    return rows;
}

SpeedupTable speedup_table(const CostTable& table) {
    struct Best {
        std::string label;
        double cost = INFINITY;
    };
    std::map<std::size_t, std::pair<Best, Best>> per_size;  // network, insertion
    for (const auto& [sorter, by_size] : table) {
        const bool network = sorter.starts_with("SN ");
        const bool insertion = sorter.starts_with("IS ");
        if (!network && !insertion) continue;
        for (const auto& [size, cost] : by_size) {
            auto& slot = network ? per_size[size].first : per_size[size].second;
            if (cost < slot.cost || slot.label.empty()) slot = {sorter, cost};
        }
    }
    std::vector<IncompleteGrid::Cell> missing;
    for (const auto& [size, pair] : per_size) {
        if (pair.first.label.empty()) missing.emplace_back("SN *", size);
        if (pair.second.label.empty()) missing.emplace_back("IS *", size);
    }
    if (!missing.empty()) throw IncompleteGrid(std::move(missing));
    if (per_size.empty()) throw IncompleteGrid({{"SN *", 0}, {"IS *", 0}});

    SpeedupTable t;
    double sum = 0;
    for (const auto& [size, pair] : per_size) {
        const double s = pair.second.cost / pair.first.cost;
        t.rows.push_back({size, pair.first.label, pair.second.label, s});
        sum += s;
    }
    t.average = sum / static_cast<double>(t.rows.size());
    return t;
}

}  // namespace sortkit::bench
