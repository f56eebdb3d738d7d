#include "sortkit/networks/emit.hpp"

#include <sstream>
#include <stdexcept>

#include "sortkit/networks/table_format.hpp"

namespace sortkit::networks {
namespace {

constexpr std::size_t kMinUnrolled = 2;
constexpr std::size_t kMaxUnrolled = 16;

void emit_swap(std::ostringstream& out, std::size_t low, std::size_t high) {
    out << "    swap(items[" << low << "], items[" << high << "]);\n";
}

void emit_signature(std::ostringstream& out, std::size_t n) {
    out << "template <typename Swap>\n"
        << "inline void sort_" << n << "(SortItem* items, const Swap& swap) noexcept {\n";
}

std::string emit_straight_line(const Network& net) {
    std::ostringstream out;
    emit_signature(out, net.channels());
    if (net.size() == 0) out << "    (void)items;\n    (void)swap;\n";
    for (const auto& c : net.comparators()) emit_swap(out, c.low, c.high);
    out << "}\n";
    return out.str();
}

std::string emit_recursive(const Network& net) {
    const std::size_t n = net.channels();
    if (generate_bose_nelson(n).comparators() != net.comparators()) {
        throw std::invalid_argument("recursive emission requires a Bose-Nelson network in natural order");
    }
    std::ostringstream out;
    emit_signature(out, n);
    const std::size_t first = n / 2;
    const std::size_t second = n - first;
    if (n < 2) out << "    (void)items;\n    (void)swap;\n";
    if (first >= 2) out << "    sort_" << first << "(items, swap);\n";
    if (second >= 2) out << "    sort_" << second << "(items + " << first << ", swap);\n";
    for (const auto& c : bose_nelson_merger(first, second)) emit_swap(out, c.low, c.high);
    out << "}\n";
    return out.str();
}

}  // namespace

std::optional<EmitDialect> parse_dialect(std::string_view text) noexcept {
    if (text == "table") return EmitDialect::Table;
    if (text == "source") return EmitDialect::Source;
    return std::nullopt;
}

std::string emit_unrolled_source(const Network& net, EmitDialect dialect) {
    if (dialect == EmitDialect::Table) return format_table(net);
    if (net.ordering() == NetworkFamily::BoseNelsonRecursive) return emit_recursive(net);
    return emit_straight_line(net);
}

std::string_view family_code_name(NetworkFamily family) noexcept {
    switch (family) {
        case NetworkFamily::Best: return "best";
        case NetworkFamily::BoseNelsonLocality: return "bn_l";
        case NetworkFamily::BoseNelsonParallel: return "bn_p";
        case NetworkFamily::BoseNelsonRecursive: return "bn_r";
    }
    return "?";
}

std::optional<NetworkFamily> parse_family_code_name(std::string_view text) noexcept {
    for (auto f : kAllFamilies) {
        if (text == family_code_name(f)) return f;
    }
    return parse_family(text);
}

namespace {

std::string family_enumerator(NetworkFamily family) {
    switch (family) {
        case NetworkFamily::Best: return "Best";
        case NetworkFamily::BoseNelsonLocality: return "BoseNelsonLocality";
        case NetworkFamily::BoseNelsonParallel: return "BoseNelsonParallel";
        case NetworkFamily::BoseNelsonRecursive: return "BoseNelsonRecursive";
    }
    return "Best";
}

}  // namespace

FamilyUnit emit_family_unit(NetworkFamily family) {
    const std::string code = std::string(family_code_name(family));
    const std::string banner = "// Generated by sortkit-codegen --family " + code + ". Do not edit.\n";

    std::ostringstream hdr;
    hdr << banner << "#pragma once\n\n"
        << "#include <cstddef>\n\n"
        << "#include \"sortkit/sort_item.hpp\"\n\n"
        << "namespace sortkit::small::generated::" << code << " {\n\n";
    for (std::size_t n = kMinUnrolled; n <= kMaxUnrolled; ++n) {
        const Network net = family_network(family, n);
        hdr << "// size " << net.size() << ", depth " << depth(net) << "\n";
        hdr << emit_unrolled_source(net, EmitDialect::Source) << "\n";
    }
    hdr << "/// Delegates to the sorter for exactly n items; other n are left untouched.\n"
        << "template <typename Swap>\n"
        << "inline void sort(SortItem* items, std::size_t n, const Swap& swap) noexcept {\n"
        << "    switch (n) {\n";
    for (std::size_t n = kMinUnrolled; n <= kMaxUnrolled; ++n) {
        hdr << "        case " << n << ": sort_" << n << "(items, swap); break;\n";
    }
    hdr << "        default: break;\n"
        << "    }\n"
        << "}\n\n"
        << "}  // namespace sortkit::small::generated::" << code << "\n";

    std::ostringstream src;
    src << banner
        << "#include \"sortkit/generated/" << code << "_sorters.hpp\"\n"
        << "#include \"sortkit/smallsort/family_table.hpp\"\n\n"
        << "namespace sortkit::small::detail {\n"
        << "namespace {\n\n"
        << "struct Entry {\n"
        << "    template <typename Swap>\n"
        << "    static void sort(SortItem* items, std::size_t n, const Swap& swap) noexcept {\n"
        << "        generated::" << code << "::sort(items, n, swap);\n"
        << "    }\n"
        << "};\n\n"
        << "}  // namespace\n\n"
        << "template <>\n"
        << "SizedSortFn family_sorter<networks::NetworkFamily::" << family_enumerator(family)
        << ">(SwapStrategy swap) noexcept {\n"
        << "    return FamilyTable<Entry>::lookup(swap);\n"
        << "}\n\n"
        << "}  // namespace sortkit::small::detail\n";

    return {hdr.str(), src.str()};
}

}  // namespace sortkit::networks
