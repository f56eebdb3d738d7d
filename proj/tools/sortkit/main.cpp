#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sortkit/errors.hpp"

namespace {

using namespace sortkit::cli;

void add_bench_options(CLI::App& cmd, BenchOptions& o) {
    cmd.add_option("--sorters", o.sorters, "Comma-separated sorter labels, e.g. \"SN BN-L 4CmS,IS Def\"");
    cmd.add_option("--sizes", o.sizes, "Array sizes: 8, 2..16, 2,4,8");
    cmd.add_option("--loop", o.loop, "one-array-repeat or array-in-row")->capture_default_str();
    cmd.add_option("--iterations", o.iterations, "Sorts per timed phase (one-array-repeat; default 100)");
    cmd.add_option("--measures", o.measures, "Measurements per sorter and size (default 500)");
    cmd.add_option("--arrays", o.arrays, "Subarrays per sweep (array-in-row; default: just above --cache-bytes)");
    cmd.add_option("--seed", o.seed, "Master seed (default: from the clock, printed)");
    cmd.add_option("--cache-bytes", o.cache_bytes, "Cache size the array-in-row input must exceed")
        ->capture_default_str();
    cmd.add_option("--out", o.out, "CSV output path; machine info goes next to it as .json")->capture_default_str();
    cmd.add_option("--preset", o.preset, "small-onearray, quicksort or rss");
    cmd.add_flag("--quiet", o.quiet, "No per-run progress on stderr");
    cmd.add_flag("--dry-run", o.dry_run, "Print the resolved plan and exit");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sortkit: sorting networks, register sample sort and a measurement harness"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write network tables or unrolled sorter sources");
    gen_cmd->add_option("--family", gen.family, "best, bn-l, bn-p, bn-r or all")->capture_default_str();
    gen_cmd->add_option("--sizes", gen.sizes, "Sizes within 2..16 (table format)")->capture_default_str();
    gen_cmd->add_option("--format", gen.format, "table or source")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output directory")->capture_default_str();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Zero-one check networks and compare swap strategies");
    verify_cmd->add_option("--family", verify.family, "best, bn-l, bn-p, bn-r or all")->capture_default_str();
    verify_cmd->add_option("--sizes", verify.sizes, "Sizes within 2..16")->capture_default_str();
    verify_cmd->add_option("--trials", verify.trials, "Random pairs per swap strategy; 0 skips swaps")
        ->capture_default_str();
    verify_cmd->add_option("--tables", verify.tables, "Verify these table files instead of the built-in networks");

    BenchOptions bench;
    bench.iterations = 0;
    bench.measures = 0;
    auto* bench_cmd = app.add_subcommand("bench", "Measure sorters and write a CSV of costs");
    add_bench_options(*bench_cmd, bench);

    ReportOptions report;
    auto* report_cmd = app.add_subcommand("report", "Rank sorters, compute speedups, draw box plots");
    report_cmd->add_option("inputs", report.inputs, "Measurement CSV files")->required();
    report_cmd->add_option("--format", report.format, "text, csv or svg")->capture_default_str();
    report_cmd->add_option("--out", report.out, "Output directory for csv and svg")->capture_default_str();
    report_cmd->add_option("--aggregate", report.aggregate, "mean or median")->capture_default_str();

    SweepOptions sweep;
    sweep.bench.iterations = 0;
    sweep.bench.measures = 0;
    sweep.bench.preset = "rss";
    sweep.bench.out = "sortkit-sweep.csv";
    auto* sweep_cmd = app.add_subcommand("sweep", "Benchmark RSS over oversampling factors and block sizes");
    sweep_cmd->add_option("--oversampling", sweep.oversampling, "Oversampling factors y")->capture_default_str();
    sweep_cmd->add_option("--block-sizes", sweep.block_sizes, "Block sizes z")->capture_default_str();
    sweep_cmd->add_option("--bases", sweep.bases, "Comma-separated base sorters")->capture_default_str();
    add_bench_options(*sweep_cmd, sweep.bench);
    sweep_cmd->remove_option(sweep_cmd->get_option("--sorters"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfiguration;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen);
        if (*verify_cmd) return cmd_verify(verify);
        if (*bench_cmd) return cmd_bench(bench);
        if (*report_cmd) return cmd_report(report);
        if (*sweep_cmd) return cmd_sweep(sweep);
    } catch (const sortkit::CorrectnessFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCorrectness;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfiguration;
    }
    return kExitConfiguration;
}
