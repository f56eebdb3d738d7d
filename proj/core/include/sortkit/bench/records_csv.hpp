#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sortkit/bench/measure.hpp"

namespace sortkit::bench {

inline constexpr std::string_view kRecordsHeader = "sorter,array_size,measure_index,cost,timer_kind";

/// Header row, then one row per record. Fields containing a comma, quote or
/// newline are quoted with embedded quotes doubled.
void write_records_csv(std::ostream& out, const std::vector<MeasurementRecord>& records);

/// Inverse of write_records_csv. Throws std::runtime_error naming the line
/// for a missing or wrong header, a wrong field count or an unparsable value.
std::vector<MeasurementRecord> read_records_csv(std::istream& in);

std::vector<MeasurementRecord> load_records_csv(const std::filesystem::path& path);

/// Quotes a field if it needs it.
std::string csv_field(std::string_view text);

/// Splits one CSV record; quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace sortkit::bench
