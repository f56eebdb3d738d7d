#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "sortkit/bench/stats.hpp"

namespace sortkit::bench {

/// One horizontal-axis box per sorter for a single array size: axes, boxes,
/// median line, whiskers and outlier dots.
std::string boxplot_svg(std::size_t array_size, const std::map<std::string, BoxStats>& boxes,
                        std::string_view unit);

}  // namespace sortkit::bench
