#include "sortkit/bench/sorter_registry.hpp"

#include <algorithm>
#include <sstream>

#include "sortkit/errors.hpp"
#include "sortkit/rss/rss_sort.hpp"
#include "sortkit/smallsort/small_sort.hpp"

namespace sortkit::bench {

namespace {

std::vector<std::string> tokens_of(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::string join(const std::vector<std::string>& tokens, std::size_t from) {
    std::string s;
    for (std::size_t i = from; i < tokens.size(); ++i) {
        if (!s.empty()) s += ' ';
        s += tokens[i];
    }
    return s;
}

rss::RssConfig parse_rss_tail(const std::vector<std::string>& tokens, std::size_t at, std::string_view label) {
    if (tokens.size() < at + 2) {
        throw ConfigurationError("expected 'RSS <xyz> <small sorter>' in '" + std::string(label) + "'");
    }
    rss::RssConfig cfg = rss::parse_rss_config(tokens[at]);
    cfg.base_sorter = parse_small_sorter(join(tokens, at + 1));
    cfg.validate();
    return cfg;
}

std::string rss_label(const rss::RssConfig& cfg) {
    return "RSS " + rss::rss_config_code(cfg) + " " + small_sorter_label(cfg.base_sorter);
}

SorterSpec parse_spec(std::string_view label) {
    const auto tokens = tokens_of(label);
    if (tokens.empty()) throw ConfigurationError("empty sorter label");
    const std::string& head = tokens[0];
    if (head == "SN" || head == "IS") return parse_small_sorter(label);
    if (head == "StdSort" && tokens.size() == 1) return StdSortId{};
    if (head == "QSort" && tokens.size() == 1) {
        hybrid::HybridConfig cfg;
        cfg.final_insertion_pass = true;
        cfg.base_sorter = SmallSorterId{InsertionVariant::STL};
        return cfg;
    }
    if (head == "RSS") return parse_rss_tail(tokens, 1, label);
    if (head == "QS" && tokens.size() >= 2) {
        hybrid::HybridConfig cfg;
        if (tokens[1] == "RSS") {
            cfg.base_sorter = parse_rss_tail(tokens, 2, label);
            cfg.base_case_threshold = kQuicksortRssThreshold;
        } else {
            cfg.base_sorter = parse_small_sorter(join(tokens, 1));
        }
        cfg.validate();
        return cfg;
    }
    throw ConfigurationError("unrecognized sorter '" + std::string(label) + "'");
}

}  // namespace

std::string sorter_label(const SorterSpec& spec) {
    struct Visitor {
        std::string operator()(const SmallSorterId& id) const { return small_sorter_label(id); }
        std::string operator()(const rss::RssConfig& cfg) const { return rss_label(cfg); }
        std::string operator()(const hybrid::HybridConfig& cfg) const {
            if (cfg.final_insertion_pass) return "QSort";
            if (const auto* id = std::get_if<SmallSorterId>(&cfg.base_sorter)) return "QS " + small_sorter_label(*id);
            return "QS " + rss_label(std::get<rss::RssConfig>(cfg.base_sorter));
        }
        std::string operator()(StdSortId) const { return "StdSort"; }
    };
    return std::visit(Visitor{}, spec);
}

RegisteredSorter resolve_sorter(std::string_view label) {
    RegisteredSorter r;
    r.spec = parse_spec(label);
    r.label = sorter_label(r.spec);
    if (const auto* id = std::get_if<SmallSorterId>(&r.spec)) {
        r.direct = small::small_sorter_fn(*id);
        if (is_network(*id)) r.max_size = small::kMaxNetworkSize;
    } else if (const auto* cfg = std::get_if<rss::RssConfig>(&r.spec)) {
        r.general = [c = *cfg](SortItem* items, std::size_t n) { rss::rss_sort(std::span<SortItem>(items, n), c); };
    } else if (const auto* hcfg = std::get_if<hybrid::HybridConfig>(&r.spec)) {
        r.general = [c = *hcfg](SortItem* items, std::size_t n) {
            hybrid::hybrid_quicksort(std::span<SortItem>(items, n), c);
        };
    } else {
        r.general = [](SortItem* items, std::size_t n) { std::sort(items, items + n, KeyLess{}); };
    }
    return r;
}

std::vector<RegisteredSorter> resolve_sorters(std::string_view comma_list) {
    std::vector<RegisteredSorter> out;
    std::size_t start = 0;
    while (start <= comma_list.size()) {
        const std::size_t comma = std::min(comma_list.find(',', start), comma_list.size());
        const auto piece = comma_list.substr(start, comma - start);
        if (!tokens_of(piece).empty()) out.push_back(resolve_sorter(piece));
        start = comma + 1;
    }
    if (out.empty()) throw ConfigurationError("no sorters selected");
    return out;
}

namespace {

void require_size(const RegisteredSorter& s, std::size_t n) {
    if (!s.supports(n)) {
        throw ConfigurationError("sorter '" + s.label + "' does not support array size " + std::to_string(n));
    }
}

}  // namespace

std::vector<MeasurementRecord> measure(const RegisteredSorter& sorter, const OneArrayRepeatParams& p,
                                       SeedSource& seeds, LoopDiagnostics* diag) {
    require_size(sorter, p.array_size);
    if (sorter.direct != nullptr) {
        const small::SizedSortFn fn = sorter.direct;
        return one_array_repeat(sorter.label, [fn](SortItem* a, std::size_t n) { fn(a, n); }, p, seeds, diag);
    }
    return one_array_repeat(sorter.label, sorter.general, p, seeds, diag);
}

std::vector<MeasurementRecord> measure(const RegisteredSorter& sorter, const ArrayInRowParams& p, SeedSource& seeds,
                                       LoopDiagnostics* diag) {
    require_size(sorter, p.array_size);
    if (sorter.direct != nullptr) {
        const small::SizedSortFn fn = sorter.direct;
        return array_in_row(sorter.label, [fn](SortItem* a, std::size_t n) { fn(a, n); }, p, seeds, diag);
    }
    return array_in_row(sorter.label, sorter.general, p, seeds, diag);
}

}  // namespace sortkit::bench
