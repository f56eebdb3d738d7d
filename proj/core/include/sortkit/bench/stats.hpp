#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sortkit/bench/measure.hpp"

namespace sortkit::bench {

struct BoxStats {
    double q1 = 0;
    double median = 0;
    double q3 = 0;
    double iqr = 0;
    double whisker_lo = 0;  ///< smallest sample >= q1 - 1.5 iqr
    double whisker_hi = 0;  ///< largest sample <= q3 + 1.5 iqr
    std::vector<double> outliers;  ///< ascending
};

/// Quantile by linear interpolation between closest ranks: h = (n-1) q.
/// `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double q);

/// Throws EmptySample for no samples.
BoxStats boxplot_stats(std::span<const double> samples);

enum class Aggregate { Mean, Median };

/// sorter label -> array size -> aggregated cost
using CostTable = std::map<std::string, std::map<std::size_t, double>>;

CostTable summarize(std::span<const MeasurementRecord> records, Aggregate how);

/// sorter label -> array size -> all costs in measure order
std::map<std::string, std::map<std::size_t, std::vector<double>>> group_costs(
    std::span<const MeasurementRecord> records);

struct RankingRow {
    std::string sorter;
    std::size_t rank = 0;  ///< 1-based
    double geomean = 0;
    std::map<std::size_t, double> cost;      ///< aggregated cost per size
    std::map<std::size_t, double> slowdown;  ///< cost / best cost per size
    std::vector<std::size_t> best_at;        ///< sizes where this sorter is fastest
};

/// Ranks by the geometric mean over sizes of cost / (best cost at that size),
/// ascending; ties are ordered by label. Throws IncompleteGrid if any sorter
/// lacks a size that another sorter has, and ConfigurationError for
/// non-positive costs (ratios are undefined there).
std::vector<RankingRow> rank_by_geomean(const CostTable& table);

struct SpeedupRow {
    std::size_t array_size = 0;
    std::string best_network;
    std::string best_insertion;
    double speedup = 0;  ///< best insertion cost / best network cost
};

struct SpeedupTable {
    std::vector<SpeedupRow> rows;  ///< ascending size
    double average = 0;
};

/// Labels starting with "SN " are networks, "IS " insertion sorts; others
/// are ignored. Throws IncompleteGrid for a size missing either kind.
SpeedupTable speedup_table(const CostTable& table);

}  // namespace sortkit::bench
