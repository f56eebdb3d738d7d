#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sortkit/networks/network.hpp"

namespace sortkit::networks {

/// Text table: line 1 `n=<int>`, then one `<low> <high>` pair per line,
/// 0-based channels. Lines starting with `#` are comments. Blank lines are
/// ignored.
///
/// format_table writes `n=` first, a single comment line naming the family,
/// size and depth, then the comparators.
std::string format_table(const Network& net);

/// Throws std::invalid_argument with a line number on malformed input.
Network parse_table(std::string_view text, NetworkFamily ordering = NetworkFamily::Best);

Network load_table(const std::filesystem::path& path, NetworkFamily ordering = NetworkFamily::Best);

}  // namespace sortkit::networks
