// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/hfset.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace hfl {

const char *to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotAPair: return "NotAPair";
    case ErrorKind::EmptyTuple: return "EmptyTuple";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::NotSigma0: return "NotSigma0";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::UnboundedWithoutUniverse: return "UnboundedWithoutUniverse";
    case ErrorKind::StageTooLarge: return "StageTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::NodeOutsideCone: return "NodeOutsideCone";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

namespace {

struct Node {
    const HFSet *elems;
    std::uint32_t size;
    std::uint32_t rank;
    std::uint64_t hash;
    std::int64_t numeral; // -1 when not a von Neumann numeral
};

constexpr unsigned kChunkBits = 16;
constexpr std::size_t kChunkSize = std::size_t(1) << kChunkBits;
constexpr std::size_t kMaxChunks = std::size_t(1) << 16;
constexpr unsigned kShardBits = 6;
constexpr std::size_t kShards = std::size_t(1) << kShardBits;
constexpr SetId kEmptySlot = 0xffffffffu;

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t hash_elems(const std::vector<HFSet> &elems) {
    std::uint64_t h = mix(elems.size());
    for (HFSet e : elems) h = mix(h ^ e.id());
    return h;
}

// Chunked node storage: a node never moves once written, so readers only need
// an acquire load of the chunk pointer. Interning goes through sharded
// open-addressing tables, one mutex per shard.
class Store {
public:
    Store() {
        for (auto &c : m_chunks) c.store(nullptr, std::memory_order_relaxed);
        intern({}); // id 0 is the empty set
    }

    const Node &node(SetId id) const {
        Node *chunk = m_chunks[id >> kChunkBits].load(std::memory_order_acquire);
        return chunk[id & (kChunkSize - 1)];
    }

    std::size_t size() const { return m_count.load(std::memory_order_acquire); }

    SetId intern(std::vector<HFSet> elems) {
        const std::uint64_t h = hash_elems(elems);
        Shard &shard = m_shards[h >> (64 - kShardBits)];
        std::lock_guard lock(shard.mutex);
        if (shard.slots.empty()) shard.slots.assign(64, kEmptySlot);
        std::size_t mask = shard.slots.size() - 1;
        std::size_t i = h & mask;
        while (shard.slots[i] != kEmptySlot) {
            const Node &n = node(shard.slots[i]);
            if (n.hash == h && n.size == elems.size() &&
                std::equal(elems.begin(), elems.end(), n.elems))
                return shard.slots[i];
            i = (i + 1) & mask;
        }
        const SetId id = allocate(std::move(elems), h);
        shard.slots[i] = id;
        if (++shard.used * 2 > shard.slots.size()) grow(shard);
        return id;
    }

private:
    struct Shard {
        std::mutex mutex;
        std::vector<SetId> slots;
        std::size_t used = 0;
    };

    SetId allocate(std::vector<HFSet> elems, std::uint64_t h) {
        const std::uint32_t id = m_next.fetch_add(1, std::memory_order_relaxed);
        if (id == kEmptySlot || (id >> kChunkBits) >= kMaxChunks)
            throw Error(ErrorKind::BudgetExceeded, "canonical store is full");
        Node *chunk = m_chunks[id >> kChunkBits].load(std::memory_order_acquire);
        if (!chunk) {
            std::lock_guard lock(m_chunkMutex);
            chunk = m_chunks[id >> kChunkBits].load(std::memory_order_acquire);
            if (!chunk) {
                chunk = new Node[kChunkSize];
                m_chunks[id >> kChunkBits].store(chunk, std::memory_order_release);
            }
        }
        Node &n = chunk[id & (kChunkSize - 1)];
        std::uint32_t rank = 0;
        bool allNumerals = true;
        std::int64_t maxNumeral = -1;
        for (HFSet e : elems) {
            const Node &en = node(e.id());
            rank = std::max(rank, en.rank + 1);
            if (en.numeral < 0) allNumerals = false;
            else maxNumeral = std::max(maxNumeral, en.numeral);
        }
        // Distinct numerals all below |x| means x = {0, ..., |x|-1}.
        const bool isNumeral = allNumerals && maxNumeral < static_cast<std::int64_t>(elems.size());
        HFSet *data = nullptr;
        if (!elems.empty()) {
            data = new HFSet[elems.size()];
            std::copy(elems.begin(), elems.end(), data);
        }
        n.elems = data;
        n.size = static_cast<std::uint32_t>(elems.size());
        n.rank = rank;
        n.hash = h;
        n.numeral = isNumeral ? static_cast<std::int64_t>(elems.size()) : -1;
        std::atomic_thread_fence(std::memory_order_release);
        m_count.fetch_add(1, std::memory_order_acq_rel);
        return id;
    }

    void grow(Shard &shard) {
        std::vector<SetId> slots(shard.slots.size() * 2, kEmptySlot);
        const std::size_t mask = slots.size() - 1;
        for (SetId id : shard.slots) {
            if (id == kEmptySlot) continue;
            std::size_t i = node(id).hash & mask;
            while (slots[i] != kEmptySlot) i = (i + 1) & mask;
            slots[i] = id;
        }
        shard.slots = std::move(slots);
    }

    std::array<std::atomic<Node *>, kMaxChunks> m_chunks;
    std::mutex m_chunkMutex;
    std::atomic<std::uint32_t> m_next{0};
    std::atomic<std::size_t> m_count{0};
    std::array<Shard, kShards> m_shards;
};

Store &store() {
    static Store *s = new Store();
    return *s;
}

std::vector<SetId> &numeral_cache() {
    static std::vector<SetId> cache{0};
    return cache;
}
std::mutex &numeral_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

HFSet HFSet::of(std::vector<HFSet> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return of_sorted(std::move(elems));
}

HFSet HFSet::of_sorted(std::vector<HFSet> elems) { return HFSet(store().intern(std::move(elems))); }

std::span<const HFSet> HFSet::elements() const {
    const Node &n = store().node(m_id);
    return {n.elems, n.size};
}
std::size_t HFSet::size() const { return store().node(m_id).size; }
std::uint32_t HFSet::rank() const { return store().node(m_id).rank; }
std::uint64_t HFSet::hash() const { return store().node(m_id).hash; }
bool HFSet::contains(HFSet x) const {
    auto es = elements();
    return std::binary_search(es.begin(), es.end(), x);
}

std::size_t store_size() { return store().size(); }

int canonical_compare(HFSet a, HFSet b) {
    if (a == b) return 0;
    if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    auto ea = canonical_elements(a);
    auto eb = canonical_elements(b);
    for (std::size_t i = 0; i < ea.size(); ++i) {
        int c = canonical_compare(ea[i], eb[i]);
        if (c != 0) return c;
    }
    return 0; // unreachable for distinct sets
}

void canonical_sort(std::vector<HFSet> &xs) { std::sort(xs.begin(), xs.end(), canonical_less); }

std::vector<HFSet> canonical_elements(HFSet x) {
    std::vector<HFSet> es(x.begin(), x.end());
    canonical_sort(es);
    return es;
}

HFSet numeral(std::uint32_t n) {
    std::lock_guard lock(numeral_mutex());
    auto &cache = numeral_cache();
    while (cache.size() <= n) {
        HFSet prev = HFSet::from_id(cache.back());
        cache.push_back(insert(prev, prev).id());
    }
    return HFSet::from_id(cache[n]);
}

std::optional<std::uint32_t> as_numeral(HFSet x) {
    std::int64_t v = store().node(x.id()).numeral;
    if (v < 0) return std::nullopt;
    return static_cast<std::uint32_t>(v);
}

HFSet successor(HFSet x) { return insert(x, x); }

HFSet kuratowski_pair(HFSet a, HFSet b) { return HFSet::of({singleton(a), HFSet::of({a, b})}); }

std::optional<std::pair<HFSet, HFSet>> as_pair(HFSet x) {
    auto es = x.elements();
    if (es.size() == 1) {
        HFSet s = es[0];
        if (s.size() != 1) return std::nullopt;
        return std::make_pair(s.elements()[0], s.elements()[0]);
    }
    if (es.size() != 2) return std::nullopt;
    HFSet s = es[0], t = es[1];
    if (s.size() != 1) std::swap(s, t);
    if (s.size() != 1 || t.size() != 2) return std::nullopt;
    HFSet a = s.elements()[0];
    if (!t.contains(a)) return std::nullopt;
    HFSet b = t.elements()[0] == a ? t.elements()[1] : t.elements()[0];
    return std::make_pair(a, b);
}

HFSet project(HFSet x, Side side) {
    auto p = as_pair(x);
    if (!p) throw Error(ErrorKind::NotAPair, to_string(x) + " is not an ordered pair");
    return side == Side::First ? p->first : p->second;
}

HFSet make_tuple(std::span<const HFSet> xs) {
    if (xs.empty()) throw Error(ErrorKind::EmptyTuple, "make_tuple of an empty list");
    HFSet acc = xs.back();
    for (std::size_t i = xs.size() - 1; i-- > 0;) acc = kuratowski_pair(xs[i], acc);
    return acc;
}

HFSet set_union(HFSet a, HFSet b) {
    if (a == b || b.is_empty()) return a;
    if (a.is_empty()) return b;
    std::vector<HFSet> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return HFSet::of_sorted(std::move(out));
}

HFSet set_intersect(HFSet a, HFSet b) {
    if (a == b) return a;
    std::vector<HFSet> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return HFSet::of_sorted(std::move(out));
}

HFSet set_difference(HFSet a, HFSet b) {
    if (b.is_empty()) return a;
    std::vector<HFSet> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return HFSet::of_sorted(std::move(out));
}

HFSet union_all(HFSet x) {
    std::vector<HFSet> out;
    for (HFSet e : x) out.insert(out.end(), e.begin(), e.end());
    return HFSet::of(std::move(out));
}

HFSet product(HFSet x, HFSet y) {
    std::vector<HFSet> out;
    out.reserve(x.size() * y.size());
    for (HFSet a : x)
        for (HFSet b : y) out.push_back(kuratowski_pair(a, b));
    return HFSet::of(std::move(out));
}

HFSet domain(HFSet x) {
    std::vector<HFSet> out;
    for (HFSet e : x)
        if (auto p = as_pair(e)) out.push_back(p->first);
    return HFSet::of(std::move(out));
}

HFSet range(HFSet x) {
    std::vector<HFSet> out;
    for (HFSet e : x)
        if (auto p = as_pair(e)) out.push_back(p->second);
    return HFSet::of(std::move(out));
}

HFSet image(HFSet y, HFSet z) {
    std::vector<HFSet> out;
    for (HFSet e : y)
        if (auto p = as_pair(e); p && p->first == z) out.push_back(p->second);
    return HFSet::of(std::move(out));
}

HFSet insert(HFSet x, HFSet e) {
    if (x.contains(e)) return x;
    std::vector<HFSet> out(x.begin(), x.end());
    out.insert(std::upper_bound(out.begin(), out.end(), e), e);
    return HFSet::of_sorted(std::move(out));
}

bool is_subset(HFSet a, HFSet b) {
    if (a.size() > b.size()) return false;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

HFSet set_algebra(AlgebraKind kind, HFSet x, HFSet y) {
    switch (kind) {
    case AlgebraKind::UnionAll: return union_all(x);
    case AlgebraKind::BinaryUnion: return set_union(x, y);
    case AlgebraKind::Intersect: return set_intersect(x, y);
    case AlgebraKind::Difference: return set_difference(x, y);
    case AlgebraKind::Product: return product(x, y);
    case AlgebraKind::Domain: return domain(x);
    case AlgebraKind::Range: return range(x);
    case AlgebraKind::Image: return image(x, y);
    }
    return x;
}

HFSet transitive_closure(HFSet x) {
    std::unordered_set<HFSet> seen;
    std::vector<HFSet> stack(x.begin(), x.end());
    while (!stack.empty()) {
        HFSet e = stack.back();
        stack.pop_back();
        if (!seen.insert(e).second) continue;
        for (HFSet f : e)
            if (!seen.count(f)) stack.push_back(f);
    }
    return HFSet::of(std::vector<HFSet>(seen.begin(), seen.end()));
}

bool is_transitive(HFSet x) {
    for (HFSet e : x)
        if (!is_subset(e, x)) return false;
    return true;
}

bool is_ordinal(HFSet x) {
    if (!is_transitive(x)) return false;
    for (HFSet e : x)
        if (!is_transitive(e)) return false;
    return true;
}

HFSet powerset(HFSet x, std::size_t max_base) {
    if (x.size() > max_base)
        throw Error(ErrorKind::BudgetExceeded,
                    "powerset of a " + std::to_string(x.size()) + "-element set exceeds the cap of " +
                        std::to_string(max_base));
    auto es = x.elements();
    const std::size_t n = es.size();
    std::vector<HFSet> out;
    out.reserve(std::size_t(1) << n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<HFSet> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(es[i]);
        out.push_back(HFSet::of_sorted(std::move(sub)));
    }
    return HFSet::of(std::move(out));
}

std::vector<HFSet> sets_of_rank_below(std::uint32_t r) {
    if (r > 4) throw Error(ErrorKind::BudgetExceeded, "V_r is only enumerable for r <= 4");
    HFSet v;
    for (std::uint32_t i = 0; i < r; ++i) v = powerset(v, 16);
    auto out = canonical_elements(v);
    return out;
}

namespace {

void print(HFSet x, std::string &out) {
    if (auto n = as_numeral(x)) {
        out += std::to_string(*n);
        return;
    }
    if (auto p = as_pair(x)) {
        out += '<';
        print(p->first, out);
        out += ',';
        print(p->second, out);
        out += '>';
        return;
    }
    out += '{';
    bool first = true;
    for (HFSet e : canonical_elements(x)) {
        if (!first) out += ',';
        first = false;
        print(e, out);
    }
    out += '}';
}

void skip_ws(std::string_view t, std::size_t &pos) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
}

void expect(std::string_view t, std::size_t &pos, char c) {
    skip_ws(t, pos);
    if (pos >= t.size() || t[pos] != c) throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
}

} // namespace

std::string to_string(HFSet x) {
    std::string out;
    print(x, out);
    return out;
}

HFSet parse_set_at(std::string_view t, std::size_t &pos) {
    skip_ws(t, pos);
    if (pos >= t.size()) throw SyntaxError("expected a set literal", pos);
    const char c = t[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t v = 0;
        const std::size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(t[pos] - '0');
            if (v > 100000) throw SyntaxError("numeral too large", start);
            ++pos;
        }
        return numeral(static_cast<std::uint32_t>(v));
    }
    if (c == '<') {
        ++pos;
        HFSet a = parse_set_at(t, pos);
        expect(t, pos, ',');
        HFSet b = parse_set_at(t, pos);
        expect(t, pos, '>');
        return kuratowski_pair(a, b);
    }
    if (c == '{') {
        ++pos;
        std::vector<HFSet> elems;
        skip_ws(t, pos);
        if (pos < t.size() && t[pos] == '}') {
            ++pos;
            return HFSet();
        }
        for (;;) {
            elems.push_back(parse_set_at(t, pos));
            skip_ws(t, pos);
            if (pos < t.size() && t[pos] == ',') {
                ++pos;
                continue;
            }
            expect(t, pos, '}');
            break;
        }
        return HFSet::of(std::move(elems));
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
}

HFSet parse_set(std::string_view text) {
    std::size_t pos = 0;
    HFSet x = parse_set_at(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw SyntaxError("trailing input", pos);
    return x;
}

} // namespace hfl
