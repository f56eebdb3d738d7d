#include "sortkit/networks/table_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sortkit::networks {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_uint(std::string_view s, std::uint32_t& out) {
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::invalid_argument("network table line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_table(const Network& net) {
    std::ostringstream out;
    out << "n=" << net.channels() << '\n';
    out << "# family=" << family_slug(net.ordering()) << " size=" << net.size() << " depth=" << depth(net) << '\n';
    for (const auto& c : net.comparators()) out << c.low << ' ' << c.high << '\n';
    return out.str();
}

Network parse_table(std::string_view text, NetworkFamily ordering) {
    std::optional<std::uint32_t> n;
    std::vector<Comparator> comparators;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        if (!n) {
            std::uint32_t value = 0;
            if (line.substr(0, 2) != "n=" || !parse_uint(trim(line.substr(2)), value)) {
                fail(line_no, "expected 'n=<int>' header");
            }
            n = value;
            continue;
        }
        const auto space = line.find_first_of(" \t");
        Comparator c;
        if (space == std::string_view::npos || !parse_uint(line.substr(0, space), c.low) ||
            !parse_uint(trim(line.substr(space)), c.high)) {
            fail(line_no, "expected '<low> <high>'");
        }
        if (!(c.low < c.high) || c.high >= *n) fail(line_no, "comparator out of range");
        comparators.push_back(c);
    }
    if (!n) throw std::invalid_argument("network table: missing 'n=<int>' header");
    return Network(*n, std::move(comparators), ordering);
}

Network load_table(const std::filesystem::path& path, NetworkFamily ordering) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open network table " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str(), ordering);
}

}  // namespace sortkit::networks
