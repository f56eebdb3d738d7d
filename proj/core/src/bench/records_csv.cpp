#include "sortkit/bench/records_csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace sortkit::bench {

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw std::runtime_error("unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

void write_records_csv(std::ostream& out, const std::vector<MeasurementRecord>& records) {
    out << kRecordsHeader << '\n';
    for (const auto& r : records) {
        // {} gives the shortest representation that round-trips exactly
        out << fmt::format("{},{},{},{},{}\n", csv_field(r.sorter), r.array_size, r.measure_index, r.cost,
                           timer_kind_label(r.timer_kind));
    }
}

namespace {

template <typename T>
T parse_number(const std::string& field, std::size_t line_no, const char* what) {
    T value{};
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::runtime_error(fmt::format("line {}: invalid {} '{}'", line_no, what, field));
    }
    return value;
}

}  // namespace

std::vector<MeasurementRecord> read_records_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };
    if (!next_line() || line != kRecordsHeader) {
        throw std::runtime_error(fmt::format("line 1: expected header '{}'", kRecordsHeader));
    }
    std::vector<MeasurementRecord> records;
    while (next_line()) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        try {
            f = split_csv_line(line);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(fmt::format("line {}: {}", line_no, e.what()));
        }
        if (f.size() != 5) {
            throw std::runtime_error(fmt::format("line {}: expected 5 fields, got {}", line_no, f.size()));
        }
        MeasurementRecord r;
        r.sorter = f[0];
        r.array_size = parse_number<std::size_t>(f[1], line_no, "array_size");
        r.measure_index = parse_number<std::size_t>(f[2], line_no, "measure_index");
        r.cost = parse_number<double>(f[3], line_no, "cost");
        const auto kind = parse_timer_kind(f[4]);
        if (!kind) throw std::runtime_error(fmt::format("line {}: invalid timer_kind '{}'", line_no, f[4]));
        r.timer_kind = *kind;
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<MeasurementRecord> load_records_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return read_records_csv(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace sortkit::bench
