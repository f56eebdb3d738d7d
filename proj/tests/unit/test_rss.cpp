#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sortkit/errors.hpp"
#include "sortkit/rss/rss_sort.hpp"

using namespace sortkit;
using namespace sortkit::rss;

namespace {

const SplitterSet kS{10, 20, 30};

// Bucket by the boundary rule stated directly: the number of splitters
// strictly below the key.
std::uint8_t bucket_by_rank(std::uint64_t key, const SplitterSet& s) {
    return static_cast<std::uint8_t>((s.low < key) + (s.mid < key) + (s.high < key));
}

std::vector<SortItem> make_input(std::mt19937_64& rng, std::size_t n, int kind) {
    std::vector<SortItem> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (kind) {
            case 0: v[i] = {rng(), i}; break;
            case 1: v[i] = {rng() % 5, i}; break;
            case 2: v[i] = {42, i}; break;
            case 3: v[i] = {i, i}; break;
            default: v[i] = {n - i, i}; break;
        }
    }
    return v;
}

bool sorted_permutation_of(std::vector<SortItem> out, std::vector<SortItem> in) {
    if (!std::is_sorted(out.begin(), out.end(), KeyLess{})) return false;
    auto by_key_ref = [](const SortItem& a, const SortItem& b) {
        return a.key != b.key ? a.key < b.key : a.ref < b.ref;
    };
    std::sort(out.begin(), out.end(), by_key_ref);
    std::sort(in.begin(), in.end(), by_key_ref);
    return out == in;
}

}  // namespace

TEST(Classify, AnchorKeys) {
    EXPECT_EQ(classify_element(5, kS), 0);
    EXPECT_EQ(classify_element(15, kS), 1);
    EXPECT_EQ(classify_element(25, kS), 2);
    EXPECT_EQ(classify_element(35, kS), 3);
}

TEST(Classify, BoundaryKeysGoLeft) {
    EXPECT_EQ(classify_element(10, kS), 0);
    EXPECT_EQ(classify_element(20, kS), 1);
    EXPECT_EQ(classify_element(30, kS), 2);
}

TEST(Classify, PartitionPropertyOnRandomKeysAndSplitters) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100000; ++t) {
        std::uint64_t s[3] = {rng() % 100, rng() % 100, rng() % 100};
        std::sort(s, s + 3);
        const SplitterSet set{s[0], s[1], s[2]};
        const std::uint64_t key = rng() % 110;
        const auto b = classify_element(key, set);
        ASSERT_EQ(b, bucket_by_rank(key, set));
        // s_{b-1} < key <= s_b with sentinels
        const std::uint64_t lower[4] = {0, s[0], s[1], s[2]};
        if (b > 0) {
            ASSERT_LT(lower[b], key);
        }
        if (b < 3) {
            ASSERT_LE(key, s[b]);
        }
    }
}

TEST(Classify, BlockEqualsElementwise) {
    std::mt19937_64 rng(2);
    for (std::size_t n : {0, 1, 4, 7, 10, 33, 100}) {
        std::vector<SortItem> items(n);
        for (auto& it : items) it = {rng() % 40, 0};
        for (std::size_t bs = 1; bs <= 5; ++bs) {
            std::vector<std::uint8_t> out(n, 9);
            std::size_t counts[4] = {};
            classify_block(items.data(), n, kS, bs, out.data(), counts);
            std::size_t expected_counts[4] = {};
            for (std::size_t i = 0; i < n; ++i) {
                ASSERT_EQ(out[i], classify_element(items[i].key, kS)) << "bs=" << bs << " i=" << i;
                ++expected_counts[out[i]];
            }
            for (int b = 0; b < 4; ++b) EXPECT_EQ(counts[b], expected_counts[b]);
        }
    }
}

TEST(Classify, ExactlyTwoComparisonsPerElement) {
    std::mt19937_64 rng(3);
    std::vector<SortItem> items(257);
    for (auto& it : items) it = {rng() % 50, 0};
    for (std::size_t bs = 1; bs <= 5; ++bs) {
        std::size_t comparisons = 0;
        std::vector<std::uint8_t> out(items.size());
        classify_block(items.data(), items.size(), kS, bs, out.data(), nullptr,
                       [&](std::uint64_t a, std::uint64_t b) {
                           ++comparisons;
                           return a < b;
                       });
        EXPECT_EQ(comparisons, 2 * items.size()) << "bs=" << bs;
    }
}

TEST(Classify, InvalidBlockSize) {
    std::vector<std::uint8_t> out(1);
    SortItem item{};
    EXPECT_THROW(classify_block(&item, 1, kS, 0, out.data()), ConfigurationError);
    EXPECT_THROW(classify_block(&item, 1, kS, 6, out.data()), ConfigurationError);
}

TEST(Classify, RegisterBudgetTable) {
    const std::size_t expected[] = {9, 12, 15, 18, 21};
    for (std::size_t bs = 1; bs <= 5; ++bs) EXPECT_EQ(register_budget(bs), expected[bs - 1]);
}

TEST(Config, ParsesXyz) {
    const auto c = parse_rss_config("332");
    EXPECT_EQ(c.num_splitters, 3u);
    EXPECT_EQ(c.oversampling, 3u);
    EXPECT_EQ(c.block_size, 2u);
    EXPECT_EQ(c.sample_size(), 12u);
    EXPECT_EQ(rss_config_code(c), "332");
    EXPECT_THROW(parse_rss_config("732"), ConfigurationError);
    EXPECT_THROW(parse_rss_config("306"), ConfigurationError);
    EXPECT_THROW(parse_rss_config("300"), ConfigurationError);
    EXPECT_THROW(parse_rss_config("3x2"), ConfigurationError);
    EXPECT_THROW(parse_rss_config("33"), ConfigurationError);
}

TEST(Config, NetworkBaseNeedsSmallThreshold) {
    RssConfig c;
    c.base_case_threshold = 17;
    EXPECT_THROW(c.validate(), ConfigurationError);
    c.base_sorter = InsertionVariant::Def;
    EXPECT_NO_THROW(c.validate());
}

TEST(Splitters, SampleOfWholePopulation) {
    RssConfig c = parse_rss_config("311");
    std::vector<SortItem> items{{3, 0}, {1, 0}, {4, 0}, {2, 0}};
    Lcg rng(1);
    const auto s = select_splitters(items, c, rng);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, (SplitterSet{1, 2, 3}));
}

TEST(Splitters, EquidistantRanksWhenSampleIsPopulation) {
    // With n = 4a the sample is the whole input, so the splitters must be
    // exactly the a-th, 2a-th and 3a-th smallest keys.
    std::mt19937_64 shuffle_rng(4);
    for (std::size_t a = 1; a <= 9; ++a) {
        RssConfig c = parse_rss_config("3" + std::to_string(a) + "1");
        if (a > 4) c.base_sorter = InsertionVariant::Def;  // samples above 16 items
        std::vector<SortItem> items(4 * a);
        for (std::size_t i = 0; i < items.size(); ++i) items[i] = {100 + 3 * i, i};
        for (int t = 0; t < 20; ++t) {
            std::shuffle(items.begin(), items.end(), shuffle_rng);
            Lcg rng(static_cast<std::uint32_t>(t + 1));
            const auto s = select_splitters(items, c, rng);
            ASSERT_TRUE(s.has_value());
            EXPECT_EQ(*s, (SplitterSet{100 + 3 * (a - 1), 100 + 3 * (2 * a - 1), 100 + 3 * (3 * a - 1)}))
                << "a=" << a;
        }
    }
}

TEST(Splitters, SampledSplittersAreOrderedAndDeterministic) {
    RssConfig c = parse_rss_config("331");
    std::vector<SortItem> items(256);
    std::mt19937_64 shuffle_rng(4);
    for (std::size_t i = 0; i < 256; ++i) items[i] = {i, i};
    std::shuffle(items.begin(), items.end(), shuffle_rng);
    for (std::uint32_t seed = 1; seed < 200; ++seed) {
        Lcg rng(seed);
        const auto s = select_splitters(items, c, rng);
        ASSERT_TRUE(s.has_value());
        EXPECT_LT(s->low, s->mid);
        EXPECT_LT(s->mid, s->high);
        // two sampled keys lie below the low splitter, two above the high one
        EXPECT_GE(s->low, 2u);
        EXPECT_LE(s->high, 253u);
        Lcg again(seed);
        EXPECT_EQ(select_splitters(items, c, again), s);
    }
}

TEST(Splitters, TooFewItems) {
    RssConfig c = parse_rss_config("331");
    std::vector<SortItem> items(11);
    Lcg rng(1);
    EXPECT_FALSE(select_splitters(items, c, rng).has_value());
}

TEST(Splitters, AllEqualKeys) {
    RssConfig c = parse_rss_config("332");
    std::vector<SortItem> items(100, SortItem{5, 0});
    Lcg rng(1);
    EXPECT_EQ(select_splitters(items, c, rng), (SplitterSet{5, 5, 5}));
}

TEST(RssSort, BaseCaseOnly) {
    RssStats stats;
    std::mt19937_64 rng(5);
    auto v = make_input(rng, 16, 0);
    const auto in = v;
    rss_sort(v, parse_rss_config("332"), &stats);
    EXPECT_TRUE(sorted_permutation_of(v, in));
    EXPECT_EQ(stats.classified, 0u);
    EXPECT_EQ(stats.base_calls, 1u);
}

TEST(RssSort, MatchesReferenceAcrossConfigs) {
    std::mt19937_64 rng(6);
    for (const char* code : {"331", "332", "333", "341", "344"}) {
        for (std::size_t bs = 1; bs <= 5; ++bs) {
            RssConfig c = parse_rss_config(code);
            c.block_size = bs;
            for (int t = 0; t < 60; ++t) {
                const std::size_t n = 17 + rng() % 1008;
                const auto in = make_input(rng, n, t % 5);
                auto out = in;
                RssStats stats;
                rss_sort(out, c, &stats);
                ASSERT_TRUE(sorted_permutation_of(out, in)) << code << " bs=" << bs << " n=" << n;
                ASSERT_LE(stats.max_base_size, 16u);
            }
        }
    }
}

TEST(RssSort, AllEqualKeysTerminateQuickly) {
    std::vector<SortItem> v(256);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {7, i};
    RssStats stats;
    rss_sort(v, parse_rss_config("332"), &stats);
    EXPECT_EQ(stats.max_depth, 0u);
    EXPECT_EQ(stats.fallbacks, 1u);
    for (auto& it : v) EXPECT_EQ(it.key, 7u);
}

TEST(RssSort, InsertionSortBaseAndLargeThreshold) {
    std::mt19937_64 rng(8);
    RssConfig c = parse_rss_config("342");
    c.base_sorter = InsertionVariant::STL;
    c.base_case_threshold = 40;
    for (int t = 0; t < 200; ++t) {
        const auto in = make_input(rng, 17 + rng() % 500, t % 5);
        auto out = in;
        RssStats stats;
        rss_sort(out, c, &stats);
        ASSERT_TRUE(sorted_permutation_of(out, in));
        ASSERT_LE(stats.max_base_size, 40u);
    }
}

TEST(RssSort, EmptyAndTiny) {
    std::vector<SortItem> none;
    rss_sort(none, RssConfig{});
    std::vector<SortItem> one{{3, 3}};
    rss_sort(one, RssConfig{});
    EXPECT_EQ(one[0].key, 3u);
}
