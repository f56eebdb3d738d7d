#pragma once

// Conditional-swap strategies for sorting networks.
//
// Every strategy satisfies the same contract: afterwards left.key <= right.key,
// and the pair is the input pair, possibly exchanged as whole (key, ref) units.
// Equal keys never exchange (the predicate is the strict `right < left`).
// Strategies differ only in control-flow style; that difference is what the
// benchmarks measure.
//
// On x86-64 with GCC/Clang the JXhg, 4Cm, 4CmS, 6Cm, 2CPm and 2CPp strategies
// are inline assembly; elsewhere they fall back to branch-free mask selection
// with the same data flow.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <tuple>

#include "sortkit/sort_item.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SORTKIT_X86_ASM 1
#else
#define SORTKIT_X86_ASM 0
#endif

namespace sortkit {

enum class SwapStrategy : std::uint8_t {
    Branching,                ///< ISwp: if + std::swap
    TernarySelect,            ///< TCOp: predicate once, two ?: selections
    PairAssign,               ///< Tie: std::tie from a selected tuple
    JumpExchange,             ///< JXhg: cmp, jae over two xchg
    FourSelect,               ///< 4Cm: copy left to temporaries, four cmov
    FourSelectSplit,          ///< 4CmS: four cmov in independent asm blocks
    SixSelect,                ///< 6Cm: temporaries filled by cmov too
    IndirectSelect,           ///< 2CPm: cmov on item pointers
    PredicateIndirectSelect,  ///< 2CPp: materialized predicate, cmov on pointers
};

inline constexpr std::array<SwapStrategy, 9> kAllSwapStrategies = {
    SwapStrategy::Branching,    SwapStrategy::TernarySelect,   SwapStrategy::PairAssign,
    SwapStrategy::JumpExchange, SwapStrategy::FourSelect,      SwapStrategy::FourSelectSplit,
    SwapStrategy::SixSelect,    SwapStrategy::IndirectSelect,  SwapStrategy::PredicateIndirectSelect,
};

/// CLI / CSV label: ISwp, TCOp, Tie, JXhg, 4Cm, 4CmS, 6Cm, 2CPm, 2CPp.
constexpr std::string_view swap_label(SwapStrategy s) noexcept {
    switch (s) {
        case SwapStrategy::Branching: return "ISwp";
        case SwapStrategy::TernarySelect: return "TCOp";
        case SwapStrategy::PairAssign: return "Tie";
        case SwapStrategy::JumpExchange: return "JXhg";
        case SwapStrategy::FourSelect: return "4Cm";
        case SwapStrategy::FourSelectSplit: return "4CmS";
        case SwapStrategy::SixSelect: return "6Cm";
        case SwapStrategy::IndirectSelect: return "2CPm";
        case SwapStrategy::PredicateIndirectSelect: return "2CPp";
    }
    return "?";
}

constexpr std::optional<SwapStrategy> parse_swap_label(std::string_view text) noexcept {
    for (auto s : kAllSwapStrategies) {
        if (swap_label(s) == text) return s;
    }
    return std::nullopt;
}

constexpr bool strategy_is_branch_free(SwapStrategy s) noexcept {
    switch (s) {
        case SwapStrategy::Branching:
        case SwapStrategy::PairAssign:
        case SwapStrategy::JumpExchange:
            return false;
        default:
            return true;
    }
}

namespace swaps {

/// Branch-free select: c ? a : b.
constexpr std::uint64_t select(bool c, std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t mask = std::uint64_t{0} - static_cast<std::uint64_t>(c);
    return (a & mask) | (b & ~mask);
}

template <SwapStrategy S>
struct ConditionalSwap;

template <>
struct ConditionalSwap<SwapStrategy::Branching> {
    void operator()(SortItem& left, SortItem& right) const noexcept {
        if (right.key < left.key) std::swap(left, right);
    }
};

template <>
struct ConditionalSwap<SwapStrategy::TernarySelect> {
    void operator()(SortItem& left, SortItem& right) const noexcept {
        const bool r = right.key < left.key;
        const SortItem temp = left;
        left.key = r ? right.key : left.key;
        left.ref = r ? right.ref : left.ref;
        right.key = r ? temp.key : right.key;
        right.ref = r ? temp.ref : right.ref;
    }
};

template <>
struct ConditionalSwap<SwapStrategy::PairAssign> {
    void operator()(SortItem& left, SortItem& right) const noexcept {
        std::tie(left, right) = (right.key < left.key) ? std::make_tuple(right, left) : std::make_tuple(left, right);
    }
};

template <>
struct ConditionalSwap<SwapStrategy::JumpExchange> {
    void operator()(SortItem& left, SortItem& right) const noexcept {
#if SORTKIT_X86_ASM
        __asm__(
            "cmpq %[left_key],%[right_key]\n\t"
            "jae %=f\n\t"
            "xchg %[left_key],%[right_key]\n\t"
            "xchg %[left_ref],%[right_ref]\n\t"
            "%=:\n\t"
            : [left_key] "+&r"(left.key), [right_key] "+&r"(right.key),
              [left_ref] "+&r"(left.ref), [right_ref] "+&r"(right.ref)
            :
            : "cc");
#else
        if (right.key < left.key) {
            std::swap(left.key, right.key);
            std::swap(left.ref, right.ref);
        }
#endif
    }
};

template <>
struct ConditionalSwap<SwapStrategy::FourSelect> {
    void operator()(SortItem& left, SortItem& right) const noexcept {
        const std::uint64_t tmp = left.key;
        const std::uint64_t tmp_ref = left.ref;
#if SORTKIT_X86_ASM
        __asm__(
            "cmpq %[left_key],%[right_key]\n\t"
            "cmovbq %[right_key],%[left_key]\n\t"
            "cmovbq %[right_ref],%[left_ref]\n\t"
            "cmovbq %[tmp],%[right_key]\n\t"
            "cmovbq %[tmp_ref],%[right_ref]\n\t"
            : [left_key] "+&r"(left.key), [right_key] "+&r"(right.key),
              [left_ref] "+&r"(left.ref), [right_ref] "+&r"(right.ref)
            : [tmp] "r"(tmp), [tmp_ref] "r"(tmp_ref)
            : "cc");
#else
        const bool r = right.key < tmp;
        left.key = select(r, right.key, left.key);
        left.ref = select(r, right.ref, left.ref);
        right.key = select(r, tmp, right.key);
        right.ref = select(r, tmp_ref, right.ref);
#endif
    }
};

// The comparison result is materialized once; each of the four selections is
// its own asm statement, so the compiler may interleave loads and stores of
// neighbouring swaps between them. The flags register is not carried across
// statements (the compiler gives no such guarantee), each block re-tests the
// predicate instead.
template <>
struct ConditionalSwap<SwapStrategy::FourSelectSplit> {
    void operator()(SortItem& left, SortItem& right) const noexcept {
        const std::uint64_t tmp = left.key;
        const std::uint64_t tmp_ref = left.ref;
#if SORTKIT_X86_ASM
        std::uint64_t r;
        __asm__ volatile(
            "xorl %k[r],%k[r]\n\t"
            "cmpq %[left_key],%[right_key]\n\t"
            "setb %b[r]\n\t"
            : [r] "=&q"(r)
            : [left_key] "r"(left.key), [right_key] "r"(right.key)
            : "cc");
        __asm__ volatile(
            "testq %[r],%[r]\n\t"
            "cmovneq %[right_key],%[left_key]\n\t"
            : [left_key] "+r"(left.key)
            : [right_key] "r"(right.key), [r] "r"(r)
            : "cc");
        __asm__ volatile(
            "testq %[r],%[r]\n\t"
            "cmovneq %[right_ref],%[left_ref]\n\t"
            : [left_ref] "+r"(left.ref)
            : [right_ref] "r"(right.ref), [r] "r"(r)
            : "cc");
        __asm__ volatile(
            "testq %[r],%[r]\n\t"
            "cmovneq %[tmp],%[right_key]\n\t"
            : [right_key] "+r"(right.key)
            : [tmp] "r"(tmp), [r] "r"(r)
            : "cc");
        __asm__ volatile(
            "testq %[r],%[r]\n\t"
            "cmovneq %[tmp_ref],%[right_ref]\n\t"
            : [right_ref] "+r"(right.ref)
            : [tmp_ref] "r"(tmp_ref), [r] "r"(r)
            : "cc");
#else
        const bool r = right.key < tmp;
        left.key = select(r, right.key, left.key);
        left.ref = select(r, right.ref, left.ref);
        right.key = select(r, tmp, right.key);
        right.ref = select(r, tmp_ref, right.ref);
#endif
    }
};

template <>
struct ConditionalSwap<SwapStrategy::SixSelect> {
    void operator()(SortItem& left, SortItem& right) const noexcept {
#if SORTKIT_X86_ASM
        std::uint64_t tmp;
        std::uint64_t tmp_ref;
        __asm__(
            "cmpq %[left_key],%[right_key]\n\t"
            "cmovbq %[left_key],%[tmp]\n\t"
            "cmovbq %[left_ref],%[tmp_ref]\n\t"
            "cmovbq %[right_key],%[left_key]\n\t"
            "cmovbq %[right_ref],%[left_ref]\n\t"
            "cmovbq %[tmp],%[right_key]\n\t"
            "cmovbq %[tmp_ref],%[right_ref]\n\t"
            : [left_key] "+&r"(left.key), [right_key] "+&r"(right.key),
              [left_ref] "+&r"(left.ref), [right_ref] "+&r"(right.ref),
              [tmp] "=&r"(tmp), [tmp_ref] "=&r"(tmp_ref)
            :
            : "cc");
#else
        const bool r = right.key < left.key;
        const std::uint64_t tmp = select(r, left.key, 0);
        const std::uint64_t tmp_ref = select(r, left.ref, 0);
        left.key = select(r, right.key, left.key);
        left.ref = select(r, right.ref, left.ref);
        right.key = select(r, tmp, right.key);
        right.ref = select(r, tmp_ref, right.ref);
#endif
    }
};

template <>
struct ConditionalSwap<SwapStrategy::IndirectSelect> {
    void operator()(SortItem& left, SortItem& right) const noexcept {
        const SortItem temp = left;
        const SortItem* left_pointer = &left;
        const SortItem* right_pointer = &right;
#if SORTKIT_X86_ASM
        const SortItem* temp_pointer = &temp;
        __asm__ volatile(
            "cmpq %[tmp_key],%[right_key]\n\t"
            "cmovbq %[right_in],%[left_pointer]\n\t"
            "cmovbq %[temp_pointer],%[right_pointer]\n\t"
            : [left_pointer] "+&r"(left_pointer), [right_pointer] "+&r"(right_pointer)
            : [right_in] "r"(&right), [temp_pointer] "r"(temp_pointer),
              [tmp_key] "r"(temp.key), [right_key] "r"(right.key)
            : "cc");
#else
        const bool r = right.key < temp.key;
        left_pointer = r ? &right : left_pointer;
        right_pointer = r ? &temp : right_pointer;
#endif
        left = *left_pointer;
        right = *right_pointer;
    }
};

/// Pointer-selection swap driven by an externally computed predicate, so it
/// works with any strict-weak-order comparator over SortItem.
template <typename Less>
struct PredicateSwap {
    [[no_unique_address]] Less less{};

    void operator()(SortItem& left, SortItem& right) const noexcept {
        const SortItem temp = left;
        const SortItem* left_pointer = &left;
        const SortItem* right_pointer = &right;
        const std::uint64_t cmp_result = static_cast<std::uint64_t>(less(right, temp));
#if SORTKIT_X86_ASM
        const SortItem* temp_pointer = &temp;
        __asm__ volatile(
            "testq %[cmp_result],%[cmp_result]\n\t"
            "cmovneq %[right_in],%[left_pointer]\n\t"
            "cmovneq %[temp_pointer],%[right_pointer]\n\t"
            : [left_pointer] "+&r"(left_pointer), [right_pointer] "+&r"(right_pointer)
            : [right_in] "r"(&right), [temp_pointer] "r"(temp_pointer), [cmp_result] "r"(cmp_result)
            : "cc");
#else
        left_pointer = cmp_result ? &right : left_pointer;
        right_pointer = cmp_result ? &temp : right_pointer;
#endif
        left = *left_pointer;
        right = *right_pointer;
    }
};

template <>
struct ConditionalSwap<SwapStrategy::PredicateIndirectSelect> : PredicateSwap<KeyLess> {};

/// Wraps a swap and counts invocations; used to check that networks execute
/// an input-independent number of comparators.
template <typename Inner>
struct CountingSwap {
    Inner inner{};
    std::uint64_t* count = nullptr;

    void operator()(SortItem& left, SortItem& right) const noexcept {
        ++*count;
        inner(left, right);
    }
};

/// Calls `f(ConditionalSwap<S>{})` for the runtime strategy `s`.
template <typename F>
decltype(auto) visit_strategy(SwapStrategy s, F&& f) {
    switch (s) {
        case SwapStrategy::Branching: return f(ConditionalSwap<SwapStrategy::Branching>{});
        case SwapStrategy::TernarySelect: return f(ConditionalSwap<SwapStrategy::TernarySelect>{});
        case SwapStrategy::PairAssign: return f(ConditionalSwap<SwapStrategy::PairAssign>{});
        case SwapStrategy::JumpExchange: return f(ConditionalSwap<SwapStrategy::JumpExchange>{});
        case SwapStrategy::FourSelect: return f(ConditionalSwap<SwapStrategy::FourSelect>{});
        case SwapStrategy::FourSelectSplit: return f(ConditionalSwap<SwapStrategy::FourSelectSplit>{});
        case SwapStrategy::SixSelect: return f(ConditionalSwap<SwapStrategy::SixSelect>{});
        case SwapStrategy::IndirectSelect: return f(ConditionalSwap<SwapStrategy::IndirectSelect>{});
        case SwapStrategy::PredicateIndirectSelect:
            return f(ConditionalSwap<SwapStrategy::PredicateIndirectSelect>{});
    }
    return f(ConditionalSwap<SwapStrategy::Branching>{});
}

}  // namespace swaps

/// Runtime-dispatched conditional swap (slow path; sorters bind the strategy
/// at compile time).
inline void conditional_swap(SwapStrategy strategy, SortItem& left, SortItem& right) noexcept {
    swaps::visit_strategy(strategy, [&](auto swap) { swap(left, right); });
}

}  // namespace sortkit
