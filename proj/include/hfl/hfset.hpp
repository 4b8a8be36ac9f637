// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfl/error.hpp"

namespace hfl {

using SetId = std::uint32_t;

// A hereditarily finite set. The value is an index into the global canonical
// store, so equality and hashing are O(1) and values are freely copyable and
// shareable across threads.
class HFSet {
public:
    constexpr HFSet() : m_id(0) {}
    static constexpr HFSet from_id(SetId id) { return HFSet(id); }

    // Builds the set with the given elements. Duplicates are allowed.
    static HFSet of(std::vector<HFSet> elems);
    static HFSet of(std::initializer_list<HFSet> elems) { return of(std::vector<HFSet>(elems)); }
    // Precondition: elems sorted by id and duplicate free.
    static HFSet of_sorted(std::vector<HFSet> elems);

    SetId id() const { return m_id; }
    bool is_empty() const { return m_id == 0; }
    // Elements, sorted by id.
    std::span<const HFSet> elements() const;
    std::size_t size() const;
    std::uint32_t rank() const;
    std::uint64_t hash() const;
    bool contains(HFSet x) const;

    friend constexpr bool operator==(HFSet a, HFSet b) { return a.m_id == b.m_id; }
    friend constexpr bool operator!=(HFSet a, HFSet b) { return a.m_id != b.m_id; }
    // Storage order. Fast but depends on interning history; use canonical_compare
    // for anything that is printed.
    friend constexpr bool operator<(HFSet a, HFSet b) { return a.m_id < b.m_id; }

    auto begin() const { return elements().begin(); }
    auto end() const { return elements().end(); }

private:
    constexpr explicit HFSet(SetId id) : m_id(id) {}
    SetId m_id;
};

// Number of distinct sets interned so far.
std::size_t store_size();

// Deterministic total order: rank, then size, then lexicographic comparison of
// the canonically sorted element lists.
int canonical_compare(HFSet a, HFSet b);
inline bool canonical_less(HFSet a, HFSet b) { return canonical_compare(a, b) < 0; }
std::vector<HFSet> canonical_elements(HFSet x);
void canonical_sort(std::vector<HFSet> &xs);

HFSet numeral(std::uint32_t n);
std::optional<std::uint32_t> as_numeral(HFSet x);
inline HFSet singleton(HFSet x) { return HFSet::of({x}); }
HFSet successor(HFSet x);

HFSet kuratowski_pair(HFSet a, HFSet b);
std::optional<std::pair<HFSet, HFSet>> as_pair(HFSet x);
inline bool is_pair(HFSet x) { return as_pair(x).has_value(); }
enum class Side { First, Second };
HFSet project(HFSet x, Side side);
HFSet make_tuple(std::span<const HFSet> xs);
inline HFSet make_tuple(std::initializer_list<HFSet> xs) {
    return make_tuple(std::span<const HFSet>(xs.begin(), xs.size()));
}

HFSet set_union(HFSet a, HFSet b);
HFSet set_intersect(HFSet a, HFSet b);
HFSet set_difference(HFSet a, HFSet b);
HFSet union_all(HFSet x);
HFSet product(HFSet x, HFSet y);
HFSet domain(HFSet x);
HFSet range(HFSet x);
// {u | <z,u> in y}
HFSet image(HFSet y, HFSet z);
HFSet insert(HFSet x, HFSet e);
bool is_subset(HFSet a, HFSet b);

enum class AlgebraKind { UnionAll, BinaryUnion, Intersect, Difference, Product, Domain, Range, Image };
HFSet set_algebra(AlgebraKind kind, HFSet x, HFSet y = HFSet());

HFSet transitive_closure(HFSet x);
bool is_transitive(HFSet x);
bool is_ordinal(HFSet x);
// Throws BudgetExceeded when |x| > max_base.
HFSet powerset(HFSet x, std::size_t max_base = 16);
// All HF sets of rank < r (r <= 4 is practical: 65536 sets at r = 4).
std::vector<HFSet> sets_of_rank_below(std::uint32_t r);

std::string to_string(HFSet x);
HFSet parse_set(std::string_view text);

// Parses one literal starting at text[pos]; advances pos. Used by the other
// grammars that embed HF literals.
HFSet parse_set_at(std::string_view text, std::size_t &pos);

} // namespace hfl

template <> struct std::hash<hfl::HFSet> {
    std::size_t operator()(hfl::HFSet x) const noexcept { return std::hash<std::uint32_t>()(x.id()); }
};
