#pragma once

// Four insertion sort variants: extensionally identical, differing in how the
// inner loop is written.
//   Def  textbook, array indices
//   POp  pointers as iterators
//   STL  libstdc++ structure: a candidate smaller than the first element is
//        moved straight to the front, otherwise an unguarded linear insert
//   AIF  Def plus the "smaller than the first element" check up front

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sortkit/sort_item.hpp"

namespace sortkit {

enum class InsertionVariant : std::uint8_t { Def, POp, STL, AIF };

inline constexpr InsertionVariant kAllInsertionVariants[] = {
    InsertionVariant::Def, InsertionVariant::POp, InsertionVariant::STL, InsertionVariant::AIF};

constexpr std::string_view insertion_label(InsertionVariant v) noexcept {
    switch (v) {
        case InsertionVariant::Def: return "Def";
        case InsertionVariant::POp: return "POp";
        case InsertionVariant::STL: return "STL";
        case InsertionVariant::AIF: return "AIF";
    }
    return "?";
}

constexpr std::optional<InsertionVariant> parse_insertion_label(std::string_view text) noexcept {
    for (auto v : kAllInsertionVariants) {
        if (insertion_label(v) == text) return v;
    }
    return std::nullopt;
}

namespace small {

template <typename Less = KeyLess>
void insertion_sort_def(SortItem* a, std::size_t n, Less less = {}) {
    for (std::size_t i = 1; i < n; ++i) {
        const SortItem x = a[i];
        std::size_t j = i;
        while (j > 0 && less(x, a[j - 1])) {
            a[j] = a[j - 1];
            --j;
        }
        a[j] = x;
    }
}

template <typename Less = KeyLess>
void insertion_sort_pop(SortItem* first, std::size_t n, Less less = {}) {
    SortItem* const last = first + n;
    for (SortItem* it = first + (n > 0 ? 1 : 0); it < last; ++it) {
        const SortItem x = *it;
        SortItem* hole = it;
        for (SortItem* prev = hole - 1; hole != first && less(x, *prev); --prev) {
            *hole = *prev;
            hole = prev;
        }
        *hole = x;
    }
}

template <typename Less = KeyLess>
void insertion_sort_stl(SortItem* first, std::size_t n, Less less = {}) {
    if (n < 2) return;
    SortItem* const last = first + n;
    for (SortItem* i = first + 1; i != last; ++i) {
        if (less(*i, *first)) {
            const SortItem x = *i;
            for (SortItem* p = i; p != first; --p) *p = *(p - 1);
            *first = x;
        } else {
            // unguarded: *first <= x stops the scan
            const SortItem x = *i;
            SortItem* hole = i;
            SortItem* next = i - 1;
            while (less(x, *next)) {
                *hole = *next;
                hole = next;
                --next;
            }
            *hole = x;
        }
    }
}

template <typename Less = KeyLess>
void insertion_sort_aif(SortItem* a, std::size_t n, Less less = {}) {
    for (std::size_t i = 1; i < n; ++i) {
        const SortItem x = a[i];
        if (less(x, a[0])) {
            for (std::size_t j = i; j > 0; --j) a[j] = a[j - 1];
            a[0] = x;
            continue;
        }
        std::size_t j = i;
        while (j > 0 && less(x, a[j - 1])) {
            a[j] = a[j - 1];
            --j;
        }
        a[j] = x;
    }
}

template <typename Less = KeyLess>
void insertion_sort(SortItem* a, std::size_t n, InsertionVariant variant, Less less = {}) {
    switch (variant) {
        case InsertionVariant::Def: insertion_sort_def(a, n, less); return;
        case InsertionVariant::POp: insertion_sort_pop(a, n, less); return;
        case InsertionVariant::STL: insertion_sort_stl(a, n, less); return;
        case InsertionVariant::AIF: insertion_sort_aif(a, n, less); return;
    }
}

}  // namespace small
}  // namespace sortkit
