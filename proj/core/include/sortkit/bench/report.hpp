#pragma once

#include <string>
#include <vector>

#include "sortkit/bench/stats.hpp"

namespace sortkit::bench {

/// Rank,Sorter,GeoM,<size>... with the aggregated cost per size.
std::string ranking_csv(const std::vector<RankingRow>& rows);

/// Aligned columns; the fastest cost at each size is marked with '*'.
std::string ranking_text(const std::vector<RankingRow>& rows);

/// array_size,best_network,best_insertion,speedup rows, then an Avg row.
std::string speedup_csv(const SpeedupTable& table);

std::string speedup_text(const SpeedupTable& table);

}  // namespace sortkit::bench
