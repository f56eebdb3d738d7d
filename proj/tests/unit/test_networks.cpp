#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sortkit/errors.hpp"
#include "sortkit/networks/emit.hpp"
#include "sortkit/networks/network.hpp"
#include "sortkit/networks/table_format.hpp"

using namespace sortkit;
using namespace sortkit::networks;

namespace {

using Pairs = std::vector<Comparator>;

// Six-channel Bose-Nelson network, as drawn with 1-based channels in the
// literature, translated to 0-based.
const Pairs kBoseNelson6 = {{1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4},
                            {0, 3}, {1, 4}, {2, 5}, {2, 4}, {1, 3}, {2, 3}};

// Ten-channel network of size 29 and depth 9, in the published level order.
const Pairs kOptimal10 = {{4, 9}, {3, 8}, {2, 7}, {1, 6}, {0, 5}, {1, 4}, {6, 9}, {0, 3}, {5, 8}, {0, 2},
                          {3, 6}, {7, 9}, {0, 1}, {2, 4}, {5, 7}, {8, 9}, {1, 2}, {4, 6}, {7, 8}, {3, 5},
                          {2, 5}, {6, 8}, {1, 3}, {4, 7}, {2, 3}, {6, 7}, {3, 4}, {5, 6}, {4, 5}};

// Green's sixteen-channel network: 60 comparators, depth 10.
const Pairs kGreen16 = {
    {0, 1},   {2, 3},  {4, 5},   {6, 7},   {8, 9},  {10, 11}, {12, 13}, {14, 15}, {0, 2},   {4, 6},
    {8, 10},  {12, 14}, {1, 3},  {5, 7},   {9, 11}, {13, 15}, {0, 4},   {8, 12},  {1, 5},   {9, 13},
    {2, 6},   {10, 14}, {3, 7},  {11, 15}, {0, 8},  {1, 9},   {2, 10},  {3, 11},  {4, 12},  {5, 13},
    {6, 14},  {7, 15},  {5, 10}, {6, 9},   {3, 12}, {13, 14}, {7, 11},  {1, 2},   {4, 8},   {1, 4},
    {7, 13},  {2, 8},   {11, 14}, {2, 4},  {5, 6},  {9, 10},  {11, 13}, {3, 8},   {7, 12},  {6, 8},
    {10, 12}, {3, 5},   {7, 9},  {3, 4},   {5, 6},  {7, 8},   {9, 10},  {11, 12}, {6, 7},   {8, 9}};

// Bose-Nelson sixteen channels, depth-first recursive order.
const Pairs kBoseNelson16Locality = {
    {0, 1},  {2, 3},  {0, 2},   {1, 3},   {1, 2},   {4, 5},   {6, 7},   {4, 6},   {5, 7},   {5, 6},   {0, 4},
    {1, 5},  {1, 4},  {2, 6},   {3, 7},   {3, 6},   {2, 4},   {3, 5},   {3, 4},   {8, 9},   {10, 11}, {8, 10},
    {9, 11}, {9, 10}, {12, 13}, {14, 15}, {12, 14}, {13, 15}, {13, 14}, {8, 12},  {9, 13},  {9, 12},  {10, 14},
    {11, 15}, {11, 14}, {10, 12}, {11, 13}, {11, 12}, {0, 8}, {1, 9},   {1, 8},   {2, 10},  {3, 11},  {3, 10},
    {2, 8},  {3, 9},  {3, 8},   {4, 12},  {5, 13},  {5, 12},  {6, 14},  {7, 15},  {7, 14},  {6, 12},  {7, 13},
    {7, 12}, {4, 8},  {5, 9},   {5, 8},   {6, 10},  {7, 11},  {7, 10},  {6, 8},   {7, 9},   {7, 8}};

// Same network in level order as published.
const Pairs kBoseNelson16Parallel = {
    {0, 1},  {2, 3},   {4, 5},   {6, 7},   {8, 9},   {10, 11}, {12, 13}, {14, 15}, {0, 2},  {1, 3},  {4, 6},
    {5, 7},  {8, 10},  {9, 11},  {12, 14}, {13, 15}, {1, 2},   {5, 6},   {0, 4},   {9, 10}, {13, 14}, {8, 12},
    {1, 5},  {2, 6},   {3, 7},   {9, 13},  {10, 14}, {11, 15}, {1, 4},   {3, 6},   {9, 12}, {11, 14}, {2, 4},
    {3, 5},  {10, 12}, {11, 13}, {3, 4},   {11, 12}, {0, 8},   {1, 9},   {2, 10},  {3, 11}, {4, 12}, {5, 13},
    {6, 14}, {7, 15},  {1, 8},   {3, 10},  {5, 12},  {7, 14},  {2, 8},   {3, 9},   {6, 12}, {7, 13}, {3, 8},
    {7, 12}, {4, 8},   {5, 9},   {6, 10},  {7, 11},  {5, 8},   {7, 10},  {6, 8},   {7, 9},  {7, 8}};

// Comparator count of the Bose-Nelson merger, by its own recurrence.
std::size_t merge_count(std::size_t x, std::size_t y) {
    if (x == 1 && y == 1) return 1;
    if (x == 1 && y == 2) return 2;
    if (x == 2 && y == 1) return 2;
    const std::size_t a = x / 2;
    const std::size_t b = (x % 2 == 1) ? y / 2 : (y + 1) / 2;
    return merge_count(a, b) + merge_count(x - a, y - b) + merge_count(x - a, b);
}

std::size_t bn_count(std::size_t n) {
    if (n < 2) return 0;
    const std::size_t a = n / 2;
    return bn_count(a) + bn_count(n - a) + merge_count(a, n - a);
}

// Plain per-input simulation, independent of the bit-sliced verifier.
bool sorts_all_binary(std::size_t n, const Pairs& comps) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
        for (auto c : comps) {
            if (v[c.low] > v[c.high]) std::swap(v[c.low], v[c.high]);
        }
        if (!std::is_sorted(v.begin(), v.end())) return false;
    }
    return true;
}

// Earliest-possible-level depth, computed directly.
std::size_t asap_depth(std::size_t n, const Pairs& comps) {
    std::vector<std::size_t> ready(n, 0);
    std::size_t d = 0;
    for (auto c : comps) {
        const std::size_t level = std::max(ready[c.low], ready[c.high]) + 1;
        ready[c.low] = ready[c.high] = level;
        d = std::max(d, level);
    }
    return d;
}

std::multiset<std::pair<std::uint32_t, std::uint32_t>> as_multiset(const Pairs& p) {
    std::multiset<std::pair<std::uint32_t, std::uint32_t>> s;
    for (auto c : p) s.emplace(c.low, c.high);
    return s;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(BoseNelson, SizesFollowTheMergeRecurrence) {
    for (std::size_t n = 2; n <= 16; ++n) {
        EXPECT_EQ(generate_bose_nelson(n).size(), bn_count(n)) << "n=" << n;
    }
}

TEST(BoseNelson, PublishedAnchors) {
    EXPECT_EQ(generate_bose_nelson(6).size(), 12u);
    EXPECT_EQ(depth(generate_bose_nelson(6)), 6u);
    EXPECT_EQ(generate_bose_nelson(16).size(), 65u);
}

TEST(BoseNelson, SixChannelsMatchReferenceDrawing) {
    EXPECT_EQ(generate_bose_nelson(6).comparators(), kBoseNelson6);
}

TEST(BoseNelson, SixteenChannelsLocalityOrderMatchesReference) {
    EXPECT_EQ(family_network(NetworkFamily::BoseNelsonLocality, 16).comparators(), kBoseNelson16Locality);
}

TEST(BoseNelson, SixteenChannelsParallelOrderHasReferenceLevels) {
    const auto& ours = family_network(NetworkFamily::BoseNelsonParallel, 16);
    EXPECT_EQ(as_multiset(ours.comparators()), as_multiset(kBoseNelson16Parallel));
    EXPECT_EQ(ours.size(), 65u);
    EXPECT_EQ(asap_depth(16, ours.comparators()), asap_depth(16, kBoseNelson16Parallel));
    // in parallel order the listed sequence is already level-compact
    EXPECT_EQ(sequential_depth(ours), depth(ours));
}

TEST(BoseNelson, DepthMatchesDirectLevelCount) {
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto net = generate_bose_nelson(n);
        EXPECT_EQ(depth(net), asap_depth(n, net.comparators())) << "n=" << n;
    }
}

TEST(BoseNelson, MergerOfOneAndOne) {
    EXPECT_EQ(bose_nelson_merger(1, 1), (Pairs{{0, 1}}));
    EXPECT_EQ(bose_nelson_merger(1, 2), (Pairs{{0, 2}, {0, 1}}));
    EXPECT_EQ(bose_nelson_merger(2, 1), (Pairs{{0, 2}, {1, 2}}));
}

TEST(BestNetworks, TenChannelAnchor) {
    const auto& net = best_network(10);
    EXPECT_EQ(net.size(), 29u);
    EXPECT_EQ(depth(net), 9u);
    EXPECT_EQ(as_multiset(net.comparators()), as_multiset(kOptimal10));
    EXPECT_TRUE(sorts_all_binary(10, kOptimal10));
}

TEST(BestNetworks, SixteenChannelsAreGreensNetwork) {
    const auto& net = best_network(16);
    EXPECT_EQ(net.size(), 60u);
    EXPECT_EQ(depth(net), 10u);
    EXPECT_EQ(as_multiset(net.comparators()), as_multiset(kGreen16));
}

TEST(BestNetworks, KnownSizesAndDepths) {
    const std::map<std::size_t, std::pair<std::size_t, std::size_t>> expected = {
        {9, {25, 7}},  {10, {29, 9}}, {11, {35, 8}}, {12, {39, 9}},
        {13, {45, 10}}, {14, {51, 10}}, {15, {56, 10}}, {16, {60, 10}}};
    for (const auto& [n, sd] : expected) {
        EXPECT_EQ(best_network(n).size(), sd.first) << "n=" << n;
        EXPECT_EQ(depth(best_network(n)), sd.second) << "n=" << n;
    }
}

TEST(BestNetworks, UpToEightCoincideWithBoseNelson) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto bn = generate_bose_nelson(n);
        EXPECT_EQ(best_network(n).size(), bn.size()) << "n=" << n;
        EXPECT_EQ(depth(best_network(n)), depth(bn)) << "n=" << n;
    }
}

TEST(BestNetworks, NeverLargerThanBoseNelson) {
    for (std::size_t n = 2; n <= 16; ++n) {
        EXPECT_LE(best_network(n).size(), generate_bose_nelson(n).size()) << "n=" << n;
    }
}

TEST(BestNetworks, OutOfRangeThrows) {
    EXPECT_THROW(best_network(1), UnsupportedSize);
    EXPECT_THROW(best_network(17), UnsupportedSize);
}

TEST(ZeroOne, EveryFamilyAndSizeSorts) {
    for (auto family : kAllFamilies) {
        for (std::size_t n = 2; n <= 16; ++n) {
            EXPECT_TRUE(verify_zero_one(family_network(family, n))) << family_label(family) << " n=" << n;
        }
    }
}

TEST(ZeroOne, AgreesWithPlainSimulation) {
    for (auto family : kAllFamilies) {
        for (std::size_t n = 2; n <= 12; ++n) {
            const auto& net = family_network(family, n);
            EXPECT_EQ(verify_zero_one(net), sorts_all_binary(n, net.comparators()));
        }
    }
}

TEST(ZeroOne, RemovingAnyComparatorBreaksSmallNetworks) {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto& net = best_network(n);
        for (std::size_t skip = 0; skip < net.size(); ++skip) {
            Pairs p = net.comparators();
            p.erase(p.begin() + static_cast<std::ptrdiff_t>(skip));
            const Network broken(n, p, NetworkFamily::Best);
            EXPECT_EQ(verify_zero_one(broken), sorts_all_binary(n, p)) << "n=" << n << " skip=" << skip;
        }
    }
    Pairs p = best_network(16).comparators();
    p.pop_back();
    EXPECT_FALSE(verify_zero_one(Network(16, p, NetworkFamily::Best)));
}

TEST(ZeroOne, TooManyChannelsThrows) {
    EXPECT_THROW(verify_zero_one(generate_bose_nelson(25)), TooLargeForExhaustive);
}

TEST(Network, RejectsBadComparators) {
    EXPECT_THROW(Network(4, {{2, 1}}, NetworkFamily::Best), std::invalid_argument);
    EXPECT_THROW(Network(4, {{1, 4}}, NetworkFamily::Best), std::invalid_argument);
    EXPECT_THROW(Network(4, {{1, 1}}, NetworkFamily::Best), std::invalid_argument);
}

TEST(Levels, AreChannelDisjointAndPreserveComparators) {
    for (auto family : kAllFamilies) {
        for (std::size_t n = 2; n <= 16; ++n) {
            const auto& net = family_network(family, n);
            const auto lv = compute_levels(net);
            Pairs flat;
            for (const auto& level : lv.levels) {
                std::set<std::uint32_t> used;
                for (auto c : level) {
                    EXPECT_TRUE(used.insert(c.low).second);
                    EXPECT_TRUE(used.insert(c.high).second);
                    flat.push_back(c);
                }
            }
            EXPECT_EQ(as_multiset(flat), as_multiset(net.comparators()));
            EXPECT_EQ(lv.depth(), asap_depth(n, net.comparators()));
        }
    }
}

TEST(Levels, EmptyNetworkHasDepthZero) {
    EXPECT_EQ(depth(Network(5, {}, NetworkFamily::Best)), 0u);
}

TEST(Orderings, AllFamiliesShareTheBoseNelsonMultiset) {
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto ref = as_multiset(generate_bose_nelson(n).comparators());
        EXPECT_EQ(as_multiset(family_network(NetworkFamily::BoseNelsonLocality, n).comparators()), ref);
        EXPECT_EQ(as_multiset(family_network(NetworkFamily::BoseNelsonParallel, n).comparators()), ref);
        EXPECT_EQ(as_multiset(family_network(NetworkFamily::BoseNelsonRecursive, n).comparators()), ref);
    }
}

TEST(Orderings, PerChannelSequencesArePreserved) {
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto bn = generate_bose_nelson(n);
        const auto par = reorder_parallelism(bn);
        EXPECT_EQ(channel_sequences(par), channel_sequences(bn)) << "n=" << n;
        EXPECT_EQ(reorder_locality(par).comparators(), bn.comparators()) << "n=" << n;
    }
}

TEST(Orderings, LocalityRejectsForeignNetworks) {
    EXPECT_THROW(reorder_locality(best_network(10)), std::invalid_argument);
}

TEST(TableFormat, RoundTrips) {
    for (auto family : kAllFamilies) {
        for (std::size_t n = 2; n <= 16; ++n) {
            const auto& net = family_network(family, n);
            const auto text = format_table(net);
            const auto back = parse_table(text, family);
            EXPECT_EQ(back.channels(), n);
            EXPECT_EQ(back.comparators(), net.comparators());
        }
    }
}

TEST(TableFormat, ToleratesCommentsAndBlankLines) {
    const auto net = parse_table("# header\n\nn=3\n# c\n1 2\n\n0 2\n0 1\n");
    EXPECT_EQ(net.channels(), 3u);
    EXPECT_EQ(net.comparators(), (Pairs{{1, 2}, {0, 2}, {0, 1}}));
}

TEST(TableFormat, ReportsLineNumbers) {
    try {
        parse_table("n=4\n0 1\n2 x\n");
        FAIL() << "expected an exception";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_table("0 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_table("n=3\n0 3\n"), std::invalid_argument);
}

TEST(TableFormat, ShippedGoldenTablesMatchGenerator) {
    const std::filesystem::path dir = SORTKIT_TEST_DATA_DIR "/networks";
    for (auto family : {NetworkFamily::BoseNelsonLocality, NetworkFamily::BoseNelsonParallel}) {
        for (std::size_t n = 2; n <= 16; ++n) {
            char name[32];
            std::snprintf(name, sizeof name, "%s_%02zu.txt", std::string(family_slug(family)).c_str(), n);
            const auto path = dir / name;
            ASSERT_TRUE(std::filesystem::exists(path)) << path;
            EXPECT_EQ(read_file(path), format_table(family_network(family, n))) << path;
        }
    }
}

TEST(Emit, SourceHasOneSwapPerComparator) {
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto& net = best_network(n);
        const auto src = emit_unrolled_source(net, EmitDialect::Source);
        std::size_t count = 0;
        for (std::size_t pos = 0; (pos = src.find("swap(items[", pos)) != std::string::npos; ++pos) ++count;
        EXPECT_EQ(count, net.size()) << "n=" << n;
        EXPECT_NE(src.find("sort_" + std::to_string(n) + "("), std::string::npos);
    }
}

TEST(Emit, RecursiveSourceCallsHalves) {
    const auto src = emit_unrolled_source(family_network(NetworkFamily::BoseNelsonRecursive, 16), EmitDialect::Source);
    EXPECT_NE(src.find("sort_8(items, swap);"), std::string::npos);
    EXPECT_NE(src.find("sort_8(items + 8, swap);"), std::string::npos);
}

TEST(Emit, TableDialectEqualsFormatTable) {
    const auto& net = best_network(12);
    EXPECT_EQ(emit_unrolled_source(net, EmitDialect::Table), format_table(net));
}

TEST(Emit, FamilyUnitIsDeterministic) {
    for (auto family : kAllFamilies) {
        const auto a = emit_family_unit(family);
        const auto b = emit_family_unit(family);
        EXPECT_EQ(a.header, b.header);
        EXPECT_EQ(a.source, b.source);
    }
}
