#include "commands.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "json.hpp"
#include "sortkit/bench/check.hpp"
#include "sortkit/bench/records_csv.hpp"
#include "sortkit/bench/report.hpp"
#include "sortkit/bench/sorter_registry.hpp"
#include "sortkit/bench/stats.hpp"
#include "sortkit/bench/svg.hpp"
#include "sortkit/errors.hpp"
#include "sortkit/networks/emit.hpp"
#include "sortkit/networks/network.hpp"
#include "sortkit/networks/table_format.hpp"
#include "sortkit/swaps/conditional_swap.hpp"

namespace fs = std::filesystem;

namespace sortkit::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_count(const std::string& text, const std::string& what) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ConfigurationError("invalid " + what + " '" + text + "'");
    }
    return v;
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    {
        std::ifstream in(path, std::ios::binary);
        if (in) {
            const std::string existing((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            if (existing == content) return;
        }
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::vector<networks::NetworkFamily> parse_families(const std::string& text) {
    if (text == "all") return {std::begin(networks::kAllFamilies), std::end(networks::kAllFamilies)};
    std::vector<networks::NetworkFamily> out;
    for (const auto& f : split_list(text)) {
        const auto fam = networks::parse_family(f);
        if (!fam) throw ConfigurationError("unknown network family '" + f + "' (best, bn-l, bn-p, bn-r, all)");
        out.push_back(*fam);
    }
    return out;
}

std::vector<std::size_t> network_sizes(const std::string& text) {
    auto sizes = parse_sizes(text);
    for (auto n : sizes) {
        if (n < 2 || n > 16) throw UnsupportedSize(n, "networks cover 2..16");
    }
    return sizes;
}

std::string host_description() {
    std::string model;
    std::ifstream cpuinfo("/proc/cpuinfo");
    for (std::string line; std::getline(cpuinfo, line);) {
        if (line.starts_with("model name")) {
            model = trim(line.substr(line.find(':') + 1));
            break;
        }
    }
    utsname u{};
    std::string os;
    if (uname(&u) == 0) os = fmt::format("{} {} {}", u.sysname, u.release, u.machine);
    return model.empty() ? os : model + "; " + os;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = std::min(text.find(sep, start), text.size());
        auto piece = trim(std::string_view(text).substr(start, pos - start));
        if (!piece.empty()) out.push_back(std::move(piece));
        start = pos + 1;
    }
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& piece : split_list(text)) {
        const auto dots = piece.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_count(piece, "size"));
            continue;
        }
        const auto lo = parse_count(trim(piece.substr(0, dots)), "size range");
        const auto hi = parse_count(trim(piece.substr(dots + 2)), "size range");
        if (lo > hi) throw ConfigurationError("empty size range '" + piece + "'");
        for (auto n = lo; n <= hi; ++n) out.push_back(n);
    }
    if (out.empty()) throw ConfigurationError("no sizes given");
    return out;
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> p = {
        {"small-onearray", 100, 500, "2..16",
         "SN Best 4CmS,SN BN-L 4CmS,SN BN-P 4CmS,SN BN-R 4CmS,IS Def,IS POp,IS STL,IS AIF"},
        {"quicksort", 50, 200, "16384", "QS SN Best 4CmS,QS SN BN-L 4CmS,QS IS STL,QSort,StdSort"},
        {"rss", 50, 200, "256", "RSS 332 SN Best 4CmS,RSS 332 SN BN-L 4CmS,RSS 332 IS Def,RSS 332 IS STL"},
    };
    return p;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets()) {
        if (p.name == name) return p;
    }
    throw ConfigurationError("unknown preset '" + name + "' (small-onearray, quicksort, rss)");
}

int cmd_gen(const GenOptions& o) {
    const auto families = parse_families(o.family);
    const auto dialect = networks::parse_dialect(o.format);
    if (!dialect) throw ConfigurationError("unknown gen format '" + o.format + "' (table, source)");
    const auto sizes = network_sizes(o.sizes);
    const fs::path dir(o.out);
    for (auto family : families) {
        if (*dialect == networks::EmitDialect::Table) {
            for (auto n : sizes) {
                const auto& net = networks::family_network(family, n);
                const auto path = dir / fmt::format("{}_{:02}.txt", networks::family_slug(family), n);
                write_file(path, networks::format_table(net));
                std::cout << fmt::format("wrote {} (size {}, depth {})\n", path.string(), net.size(),
                                         networks::depth(net));
            }
        } else {
            // a unit always covers 2..16: recursive sorters call the smaller ones
            const auto unit = networks::emit_family_unit(family);
            const std::string code(networks::family_code_name(family));
            write_file(dir / (code + "_sorters.hpp"), unit.header);
            write_file(dir / (code + "_sorters.cpp"), unit.source);
            std::cout << fmt::format("wrote {0}_sorters.hpp and {0}_sorters.cpp in {1}\n", code, dir.string());
        }
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& o) {
    std::size_t failures = 0;
    std::size_t checked = 0;
    auto report = [&](bool ok, const std::string& what) {
        ++checked;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
    };

    if (!o.tables.empty()) {
        for (const auto& file : o.tables) {
            try {
                const auto net = networks::load_table(file);
                report(networks::verify_zero_one(net),
                       fmt::format("network {} (n={}, size {}, depth {})", file, net.channels(), net.size(),
                                   networks::depth(net)));
            } catch (const std::invalid_argument& e) {
                report(false, fmt::format("network {}: {}", file, e.what()));
            }
        }
    } else {
        const auto sizes = network_sizes(o.sizes);
        for (auto family : parse_families(o.family)) {
            for (auto n : sizes) {
                const auto& net = networks::family_network(family, n);
                report(networks::verify_zero_one(net),
                       fmt::format("network {} n={} (size {}, depth {})", networks::family_label(family), n,
                                   net.size(), networks::depth(net)));
            }
        }
    }

    if (o.trials == 0) {
        std::cout << "swap strategies: skipped (--trials 0)\n";
    } else {
        std::mt19937_64 rng(0x5eed);
        std::vector<std::size_t> mismatches(kAllSwapStrategies.size(), 0);
        for (std::size_t t = 0; t <= o.trials; ++t) {
            SortItem a{rng(), rng()}, b{rng(), rng()};
            if (t == o.trials) b.key = a.key;  // equal keys must not exchange
            if (t % 7 == 0) a.key %= 4, b.key %= 4;
            SortItem ra = a, rb = b;
            conditional_swap(SwapStrategy::Branching, ra, rb);
            for (std::size_t s = 0; s < kAllSwapStrategies.size(); ++s) {
                SortItem xa = a, xb = b;
                conditional_swap(kAllSwapStrategies[s], xa, xb);
                if (!(xa == ra && xb == rb)) ++mismatches[s];
            }
        }
        for (std::size_t s = 0; s < kAllSwapStrategies.size(); ++s) {
            report(mismatches[s] == 0, fmt::format("swap {} on {} pairs ({} mismatches)",
                                                   swap_label(kAllSwapStrategies[s]), o.trials + 1, mismatches[s]));
        }
    }
    std::cout << fmt::format("{} checks, {} failed\n", checked, failures);
    return failures == 0 ? kExitOk : kExitCorrectness;
}

namespace {

struct BenchRun {
    std::vector<bench::MeasurementRecord> records;
    std::vector<std::string> failures;
};

BenchRun run_bench(const BenchOptions& o, const std::vector<bench::RegisteredSorter>& sorters,
                   const std::vector<std::size_t>& sizes, bench::LoopKind loop, std::uint64_t seed) {
    BenchRun run;
    for (const auto& sorter : sorters) {
        bool failed = false;
        for (auto n : sizes) {
            if (failed) break;
            // every sorter sees the same per-measure seeds
            bench::SeedSource seeds(seed);
            if (!o.quiet) std::cerr << fmt::format("  {} n={} ...\n", sorter.label, n);
            try {
                std::vector<bench::MeasurementRecord> recs;
                if (loop == bench::LoopKind::OneArrayRepeat) {
                    recs = bench::measure(sorter, bench::OneArrayRepeatParams{n, o.iterations, o.measures}, seeds);
                } else {
                    recs = bench::measure(sorter, bench::ArrayInRowParams{n, o.arrays, o.measures, o.cache_bytes},
                                          seeds);
                }
                run.records.insert(run.records.end(), recs.begin(), recs.end());
            } catch (const CorrectnessFailure& e) {
                std::cerr << e.what() << '\n';
                run.failures.emplace_back(e.what());
                failed = true;
            }
        }
    }
    return run;
}

}  // namespace

int cmd_bench(BenchOptions o) {
    if (!o.preset.empty()) {
        const auto& p = find_preset(o.preset);
        // explicit flags win; main() clears the fields it saw on the command line
        if (o.sorters.empty()) o.sorters = p.sorters;
        if (o.sizes.empty()) o.sizes = p.sizes;
        if (o.iterations == 0) o.iterations = p.iterations;
        if (o.measures == 0) o.measures = p.measures;
    }
    if (o.iterations == 0) o.iterations = 100;
    if (o.measures == 0) o.measures = 500;
    if (o.sorters.empty()) throw ConfigurationError("no sorters selected (use --sorters or --preset)");
    if (o.sizes.empty()) throw ConfigurationError("no sizes selected (use --sizes or --preset)");

    bench::LoopKind loop;
    if (o.loop == "one-array-repeat") {
        loop = bench::LoopKind::OneArrayRepeat;
    } else if (o.loop == "array-in-row") {
        loop = bench::LoopKind::ArrayInRow;
    } else {
        throw ConfigurationError("unknown loop '" + o.loop + "' (one-array-repeat, array-in-row)");
    }

    // resolve everything before measuring
    const auto sorters = bench::resolve_sorters(o.sorters);
    const auto sizes = parse_sizes(o.sizes);
    for (const auto& s : sorters) {
        for (auto n : sizes) {
            if (!s.supports(n)) {
                throw ConfigurationError(fmt::format("sorter '{}' does not support array size {}", s.label, n));
            }
            if (loop == bench::LoopKind::ArrayInRow) {
                bench::validate(bench::ArrayInRowParams{n, o.arrays, o.measures, o.cache_bytes});
            }
        }
    }
    const std::uint64_t seed =
        o.seed.value_or(static_cast<std::uint64_t>(std::chrono::system_clock::now().time_since_epoch().count()));

    std::vector<std::string> labels;
    for (const auto& s : sorters) labels.push_back(s.label);
    std::cout << "plan: bench\n";
    std::cout << fmt::format("  loop: {}\n", bench::loop_kind_label(loop));
    std::cout << fmt::format("  sorters: {}\n", fmt::join(labels, " | "));
    std::cout << fmt::format("  sizes: {}\n", fmt::join(sizes, ","));
    if (loop == bench::LoopKind::OneArrayRepeat) {
        std::cout << fmt::format("  iterations: {}\n  measures: {}\n", o.iterations, o.measures);
    } else {
        std::cout << fmt::format("  arrays: {}\n  measures: {}\n  cache-bytes: {}\n",
                                 o.arrays == 0 ? std::string("auto") : std::to_string(o.arrays), o.measures,
                                 o.cache_bytes);
    }
    std::cout << fmt::format("  out: {}\n", o.out);
    std::cout << fmt::format("seed: {}\n", seed) << std::flush;
    if (o.dry_run) return kExitOk;

    const auto run = run_bench(o, sorters, sizes, loop, seed);

    const fs::path out(o.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    {
        std::ofstream csv(out);
        bench::write_records_csv(csv, run.records);
        if (!csv) throw std::runtime_error("cannot write " + out.string());
    }
    nlohmann::json side;
    side["timer_kind"] = std::string(bench::timer_kind_label(bench::Timer::kind()));
    side["cache_bytes"] = o.cache_bytes;
    side["host"] = host_description();
    side["seed"] = seed;
    side["loop"] = std::string(bench::loop_kind_label(loop));
    side["iterations"] = o.iterations;
    side["measures"] = o.measures;
    side["sorters"] = labels;
    side["sizes"] = sizes;
    side["failures"] = run.failures;
    fs::path sidecar = out;
    sidecar.replace_extension(".json");
    std::ofstream(sidecar) << side.dump(2) << '\n';

    std::cout << fmt::format("wrote {} records to {} (machine info in {})\n", run.records.size(), out.string(),
                             sidecar.string());
    return run.failures.empty() ? kExitOk : kExitCorrectness;
}

int cmd_report(const ReportOptions& o) {
    if (o.inputs.empty()) throw ConfigurationError("report needs at least one CSV input");
    bench::Aggregate how;
    if (o.aggregate == "mean") {
        how = bench::Aggregate::Mean;
    } else if (o.aggregate == "median") {
        how = bench::Aggregate::Median;
    } else {
        throw ConfigurationError("unknown aggregate '" + o.aggregate + "' (mean, median)");
    }
    if (o.format != "text" && o.format != "csv" && o.format != "svg") {
        throw ConfigurationError("unknown report format '" + o.format + "' (csv, text, svg)");
    }
    std::vector<bench::MeasurementRecord> records;
    for (const auto& in : o.inputs) {
        auto r = bench::load_records_csv(in);
        records.insert(records.end(), r.begin(), r.end());
    }
    if (records.empty()) throw ConfigurationError("no measurement records in the input");
    const std::string unit(bench::timer_kind_label(records.front().timer_kind));
    const fs::path dir(o.out);

    if (o.format == "svg") {
        std::map<std::size_t, std::map<std::string, bench::BoxStats>> boxes;
        for (const auto& [sorter, by_size] : bench::group_costs(records)) {
            for (const auto& [size, costs] : by_size) boxes[size][sorter] = bench::boxplot_stats(costs);
        }
        for (const auto& [size, per_sorter] : boxes) {
            const auto path = dir / fmt::format("boxplot_{}.svg", size);
            write_file(path, bench::boxplot_svg(size, per_sorter, unit));
            std::cout << "wrote " << path.string() << '\n';
        }
        return kExitOk;
    }

    const auto table = bench::summarize(records, how);
    const auto ranking = bench::rank_by_geomean(table);
    const bool has_sn = std::any_of(table.begin(), table.end(), [](const auto& e) { return e.first.starts_with("SN "); });
    const bool has_is = std::any_of(table.begin(), table.end(), [](const auto& e) { return e.first.starts_with("IS "); });
    std::optional<bench::SpeedupTable> speedup;
    if (has_sn && has_is) speedup = bench::speedup_table(table);

    if (o.format == "csv") {
        write_file(dir / "ranking.csv", bench::ranking_csv(ranking));
        std::cout << "wrote " << (dir / "ranking.csv").string() << '\n';
        if (speedup) {
            write_file(dir / "speedup.csv", bench::speedup_csv(*speedup));
            std::cout << "wrote " << (dir / "speedup.csv").string() << '\n';
        }
    } else {
        std::cout << fmt::format("Ranking by geometric mean of slowdowns ({} {}):\n", o.aggregate, unit);
        std::cout << bench::ranking_text(ranking);
        if (speedup) {
            std::cout << "\nSpeedup of the fastest network over the fastest insertion sort:\n";
            std::cout << bench::speedup_text(*speedup);
        }
    }
    if (!speedup) std::cout << "speedup table skipped: needs both SN and IS sorters\n";
    return kExitOk;
}

int cmd_sweep(SweepOptions o) {
    std::vector<std::string> labels;
    const auto ys = parse_sizes(o.oversampling);
    const auto zs = parse_sizes(o.block_sizes);
    for (const auto& base : split_list(o.bases)) {
        for (auto y : ys) {
            for (auto z : zs) {
                if (y < 1 || y > 9) throw ConfigurationError(fmt::format("oversampling {} outside 1..9", y));
                labels.push_back(fmt::format("RSS 3{}{} {}", y, z, base));
            }
        }
    }
    o.bench.sorters = fmt::format("{}", fmt::join(labels, ","));
    if (o.bench.sizes.empty()) o.bench.sizes = find_preset("rss").sizes;
    return cmd_bench(std::move(o.bench));
}

}  // namespace sortkit::cli
