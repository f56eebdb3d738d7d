#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sortkit/bench/records_csv.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(SORTKIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    Result r;
    if (pipe == nullptr) return r;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) r.out += buf;
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("sortkit_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::size_t comparator_lines(const std::string& table) {
    std::istringstream in(table);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line[0] != '#' && line.rfind("n=", 0) != 0) ++count;
    }
    return count;
}

}  // namespace

TEST_F(Cli, GenTablesOnePerSizeAndStable) {
    auto r = run("gen --family bn-l --sizes 2..16 --format table --out " + path("t"));
    ASSERT_EQ(r.code, 0) << r.out;
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir_ / "t")) files += e.path().extension() == ".txt";
    EXPECT_EQ(files, 15u);
    const auto first = slurp(dir_ / "t" / "bn-l_16.txt");
    r = run("gen --family bn-l --sizes 2..16 --format table --out " + path("t"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(slurp(dir_ / "t" / "bn-l_16.txt"), first);
    EXPECT_EQ(first, slurp(fs::path(SORTKIT_TEST_DATA_DIR) / "networks" / "bn-l_16.txt"));
}

TEST_F(Cli, GenBestTenHasTwentyNineComparators) {
    const auto r = run("gen --family best --sizes 10 --out " + path("b"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(comparator_lines(slurp(dir_ / "b" / "best_10.txt")), 29u);
}

TEST_F(Cli, GenSourceWritesCompilationUnit) {
    const auto r = run("gen --family bn-r --format source --out " + path("s"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(slurp(dir_ / "s" / "bn_r_sorters.hpp").find("sort_16"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir_ / "s" / "bn_r_sorters.cpp"));
}

TEST_F(Cli, GenRejectsBadInput) {
    EXPECT_EQ(run("gen --sizes 17 --out " + path("x")).code, 2);
    EXPECT_EQ(run("gen --family nope --out " + path("x")).code, 2);
    EXPECT_EQ(run("gen --format pdf --out " + path("x")).code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, VerifyDefaultSuitePasses) {
    const auto r = run("verify");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("0 failed"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, VerifyTrialsZeroSkipsSwaps) {
    const auto r = run("verify --family best --trials 0");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("skipped"), std::string::npos);
    EXPECT_EQ(r.out.find("PASS swap"), std::string::npos);
}

TEST_F(Cli, VerifyBrokenTableFailsAndNamesIt) {
    ASSERT_EQ(run("gen --family best --sizes 9 --out " + path("g")).code, 0);
    const auto good = dir_ / "g" / "best_09.txt";
    const auto text = slurp(good);
    const auto broken = dir_ / "broken_09.txt";
    std::ofstream(broken) << text.substr(0, text.rfind('\n', text.size() - 2) + 1);  // drop last comparator
    const auto r = run("verify --trials 0 --tables " + good.string() + " " + broken.string());
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("FAIL network " + broken.string()), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("PASS network " + good.string()), std::string::npos) << r.out;
}

TEST_F(Cli, BenchWritesCsvAndSidecar) {
    const auto csv = path("r.csv");
    const auto r = run("bench --sorters \"SN BN-L 4CmS,IS Def\" --sizes 8 --iterations 5 --measures 3 --seed 11 "
                       "--quiet --out " + csv);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("seed: 11"), std::string::npos);
    EXPECT_LT(r.out.find("plan:"), r.out.find("wrote"));
    const auto records = sortkit::bench::load_records_csv(csv);
    std::set<std::string> labels;
    for (const auto& rec : records) labels.insert(rec.sorter);
    EXPECT_EQ(labels, (std::set<std::string>{"SN BN-L 4CmS", "IS Def"}));
    EXPECT_EQ(records.size(), 6u);
    const auto side = nlohmann::json::parse(slurp(dir_ / "r.json"));
    EXPECT_TRUE(side.contains("timer_kind"));
    EXPECT_TRUE(side.contains("cache_bytes"));
    EXPECT_TRUE(side.contains("host"));
    EXPECT_EQ(side["seed"].get<std::uint64_t>(), 11u);
}

TEST_F(Cli, BenchPrintsDerivedSeedWhenAbsent) {
    const auto r = run("bench --sorters \"IS Def\" --sizes 4 --dry-run");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("seed: "), std::string::npos);
}

TEST_F(Cli, BenchArrayInRow) {
    const auto r = run("bench --sorters \"SN Best 4Cm,QS IS Def\" --sizes 16 --loop array-in-row --measures 2 "
                       "--cache-bytes 65536 --seed 3 --quiet --out " + path("a.csv"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(sortkit::bench::load_records_csv(path("a.csv")).size(), 4u);
}

TEST_F(Cli, PresetsMapToParameterTriples) {
    auto r = run("bench --preset small-onearray --dry-run --seed 1");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("iterations: 100\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("measures: 500\n"), std::string::npos);
    EXPECT_NE(r.out.find("sizes: 2,3,4,5,6,7,8,9,10,11,12,13,14,15,16\n"), std::string::npos);
    r = run("bench --preset quicksort --dry-run --seed 1");
    EXPECT_NE(r.out.find("iterations: 50\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("measures: 200\n"), std::string::npos);
    EXPECT_NE(r.out.find("sizes: 16384\n"), std::string::npos);
    r = run("bench --preset rss --dry-run --seed 1");
    EXPECT_NE(r.out.find("iterations: 50\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("measures: 200\n"), std::string::npos);
    EXPECT_NE(r.out.find("sizes: 256\n"), std::string::npos);
    r = run("bench --preset rss --measures 7 --dry-run --seed 1");
    EXPECT_NE(r.out.find("measures: 7\n"), std::string::npos) << r.out;
}

TEST_F(Cli, BenchConfigurationErrors) {
    EXPECT_EQ(run("bench --sorters \"SN Nope 4Cm\" --sizes 8").code, 2);
    EXPECT_EQ(run("bench --sorters \"SN Best 4Cm\" --sizes 17").code, 2);
    EXPECT_EQ(run("bench --sorters \"IS Def\" --sizes 8 --loop array-in-row --arrays 10 --cache-bytes 100000").code,
              2);
    EXPECT_EQ(run("bench --sorters \"IS Def\" --sizes 8 --loop sideways").code, 2);
    EXPECT_EQ(run("bench --preset huge").code, 2);
    EXPECT_EQ(run("bench --sizes 8").code, 2);
}

TEST_F(Cli, ReportRankingMatchesHandExample) {
    std::ofstream(path("toy.csv")) << "sorter,array_size,measure_index,cost,timer_kind\n"
                                      "A,1,0,10,cycles\nA,2,0,20,cycles\nB,1,0,20,cycles\nB,2,0,20,cycles\n";
    auto r = run("report " + path("toy.csv"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("1  A"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("1.414"), std::string::npos) << r.out;
    r = run("report " + path("toy.csv") + " --format csv --out " + path("rep"));
    ASSERT_EQ(r.code, 0) << r.out;
    const auto csv = slurp(dir_ / "rep" / "ranking.csv");
    EXPECT_NE(csv.find("1,A,1,10,20"), std::string::npos) << csv;
    EXPECT_NE(csv.find("2,B,1.414"), std::string::npos) << csv;
}

TEST_F(Cli, ReportMissingCellNamesIt) {
    std::ofstream(path("hole.csv")) << "sorter,array_size,measure_index,cost,timer_kind\n"
                                       "A,1,0,10,cycles\nA,2,0,20,cycles\nB,1,0,20,cycles\n";
    const auto r = run("report " + path("hole.csv"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("(B, 2)"), std::string::npos) << r.out;
}

TEST_F(Cli, ReportSvgOnePerSize) {
    std::ofstream(path("s.csv")) << "sorter,array_size,measure_index,cost,timer_kind\n"
                                    "IS Def,4,0,10,nanos\nIS Def,4,1,12,nanos\nIS Def,8,0,30,nanos\n"
                                    "SN Best 4Cm,8,0,9,nanos\n";
    const auto r = run("report " + path("s.csv") + " --format svg --out " + path("svg"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(dir_ / "svg" / "boxplot_4.svg"));
    EXPECT_TRUE(fs::exists(dir_ / "svg" / "boxplot_8.svg"));
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(dir_ / "svg")) n += e.path().extension() == ".svg";
    EXPECT_EQ(n, 2u);
}

TEST_F(Cli, ReportSpeedupTable) {
    std::ofstream(path("sp.csv")) << "sorter,array_size,measure_index,cost,timer_kind\n"
                                     "IS Def,8,0,100,cycles\nSN Best 4Cm,8,0,50,cycles\n";
    const auto r = run("report " + path("sp.csv") + " --format csv --out " + path("o"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(slurp(dir_ / "o" / "speedup.csv").find("8,SN Best 4Cm,IS Def,2"), std::string::npos);
}

TEST_F(Cli, ReportRejectsMissingFile) {
    EXPECT_EQ(run("report " + path("none.csv")).code, 2);
}

TEST_F(Cli, SweepBuildsRssGrid) {
    const auto r = run("sweep --oversampling 2..3 --block-sizes 1,5 --bases \"IS Def\" --dry-run --seed 1");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("RSS 321 IS Def | RSS 325 IS Def | RSS 331 IS Def | RSS 335 IS Def"), std::string::npos)
        << r.out;
    EXPECT_NE(r.out.find("sizes: 256\n"), std::string::npos);
}

TEST_F(Cli, SweepRuns) {
    const auto r = run("sweep --oversampling 3 --block-sizes 2 --bases \"SN Best 4CmS\" --iterations 2 "
                       "--measures 2 --seed 5 --quiet --out " + path("sw.csv"));
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(sortkit::bench::load_records_csv(path("sw.csv")).size(), 2u);
}
