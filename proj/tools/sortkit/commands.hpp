#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sortkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCorrectness = 1;
inline constexpr int kExitConfiguration = 2;

/// "2..16", "8", "2,4,8", "2..4,16". Throws ConfigurationError.
std::vector<std::size_t> parse_sizes(const std::string& text);

std::vector<std::string> split_list(const std::string& text, char sep = ',');

struct GenOptions {
    std::string family = "best";
    std::string sizes = "2..16";
    std::string format = "table";
    std::string out = ".";
};

struct VerifyOptions {
    std::string family = "all";
    std::string sizes = "2..16";
    std::size_t trials = 1'000'000;
    std::vector<std::string> tables;
};

struct Preset {
    std::string name;
    std::size_t iterations;
    std::size_t measures;
    std::string sizes;
    std::string sorters;
};

/// small-onearray, quicksort, rss
const std::vector<Preset>& presets();
const Preset& find_preset(const std::string& name);

struct BenchOptions {
    std::string sorters;
    std::string sizes;
    std::string loop = "one-array-repeat";
    std::size_t iterations = 100;
    std::size_t measures = 500;
    std::size_t arrays = 0;
    std::optional<std::uint64_t> seed;
    std::size_t cache_bytes = std::size_t{32} << 20;
    std::string out = "sortkit-bench.csv";
    std::string preset;
    bool quiet = false;
    bool dry_run = false;
};

struct ReportOptions {
    std::vector<std::string> inputs;
    std::string format = "text";
    std::string out = ".";
    std::string aggregate = "mean";
};

struct SweepOptions {
    std::string oversampling = "1..4";
    std::string block_sizes = "1..5";
    std::string bases = "SN Best 4CmS,IS Def";
    BenchOptions bench;
};

int cmd_gen(const GenOptions& o);
int cmd_verify(const VerifyOptions& o);
int cmd_bench(BenchOptions o);
int cmd_report(const ReportOptions& o);
int cmd_sweep(SweepOptions o);

}  // namespace sortkit::cli
