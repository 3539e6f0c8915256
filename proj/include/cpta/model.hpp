#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cpta/bitvec.hpp"
#include "cpta/errors.hpp"

namespace cpta {

// Attribute universe: the target attribute is implicit; indices 0..n-2 name
// the n-1 potential parents. n is capped so swap counts (2^{n-1}) and vote
// totals (t * 2^{n-1}) stay comfortably inside uint64.
inline constexpr int kMaxN = 30;

// ---------------------------------------------------------------------------
// Context indexing convention (used everywhere: tables, matrix rows, JSON):
// for a parent set {a_0 < a_1 < ... < a_{k-1}}, the value of a_j occupies bit
// k-1-j of the context index — the SMALLEST attribute is the MOST significant
// bit. Rendering the index as a k-digit binary string thus lists attribute
// values in ascending attribute order, and ascending index order equals
// lexicographic order of the rendered strings.
// ---------------------------------------------------------------------------

class AttributeSet {
public:
    constexpr AttributeSet() = default;
    constexpr explicit AttributeSet(uint32_t bits) : bits_(bits) {}

    static constexpr AttributeSet full(int width) {
        return AttributeSet(width <= 0 ? 0u : (uint32_t(1) << width) - 1u);
    }

    constexpr uint32_t bits() const { return bits_; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int a) const { return (bits_ >> a) & 1u; }
    constexpr bool subset_of(AttributeSet o) const { return (bits_ & ~o.bits_) == 0; }

    // rank of member a within the set (0 = smallest member)
    constexpr int rank_of(int a) const {
        return std::popcount(bits_ & ((uint32_t(1) << a) - 1u));
    }

    // j-th smallest member, 0 <= j < count()
    int nth(int j) const {
        uint32_t b = bits_;
        while (j--) b &= b - 1;
        return std::countr_zero(b);
    }

    std::vector<int> to_list() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr AttributeSet operator|(AttributeSet o) const { return AttributeSet(bits_ | o.bits_); }
    constexpr AttributeSet operator&(AttributeSet o) const { return AttributeSet(bits_ & o.bits_); }
    constexpr AttributeSet operator-(AttributeSet o) const { return AttributeSet(bits_ & ~o.bits_); }

    friend constexpr bool operator==(AttributeSet, AttributeSet) = default;
    // bitmask order; doubles as the "lower parent set" tie-break
    friend constexpr auto operator<=>(AttributeSet a, AttributeSet b) { return a.bits_ <=> b.bits_; }

private:
    uint32_t bits_ = 0;
};

// k-digit binary rendering of a context index (see convention above);
// k = 0 renders the empty context as "".
std::string context_string(uint32_t index, int k);

struct Context {
    AttributeSet parents;
    uint32_t index = 0;

    bool value_of(int attribute) const {
        int k = parents.count();
        return (index >> (k - 1 - parents.rank_of(attribute))) & 1u;
    }
    std::string to_string() const { return context_string(index, parents.count()); }

    friend bool operator==(const Context&, const Context&) = default;
};

// All 2^{|parents|} contexts in ascending index order; parents = {} yields
// the single empty context. Intended for tests/CLI; hot loops iterate raw
// indices instead.
std::vector<Context> enumerate_contexts(AttributeSet parents);

// Relocates individual bits of a context index: a list of (src, dst) bit
// positions. Build once, apply per index in hot loops.
class BitMover {
public:
    BitMover() = default;

    // gathers the bits of `to` (subset of `from`) out of an index over `from`,
    // producing an index over `to`
    static BitMover restriction(AttributeSet from, AttributeSet to);

    void add(int src, int dst) { moves_.emplace_back(int8_t(src), int8_t(dst)); }

    uint32_t operator()(uint32_t x) const {
        uint32_t r = 0;
        for (auto [src, dst] : moves_) r |= ((x >> src) & 1u) << dst;
        return r;
    }

private:
    std::vector<std::pair<int8_t, int8_t>> moves_;
};

// index over `from` -> index over `to`, to ⊆ from (convenience wrapper)
uint32_t restrict_index(uint32_t index, AttributeSet from, AttributeSet to);

// Complete table for the target attribute: one preference bit per parent
// context. Bit = 1 encodes the rule γ: 1≻0, bit = 0 encodes γ: 0≻1 (a vote
// of 0 means "0 is preferred").
class Cpt {
public:
    Cpt(int n, AttributeSet parents, BitVector prefs);

    int n() const { return n_; }
    AttributeSet parents() const { return parents_; }
    const BitVector& prefs() const { return prefs_; }
    int parent_count() const { return parents_.count(); }
    uint64_t rule_count() const { return prefs_.size(); }

    // vote at a parent-context index: true = 1≻0
    bool pref(uint32_t context_index) const { return prefs_.get(context_index); }

    friend bool operator==(const Cpt&, const Cpt&) = default;

private:
    int n_;
    AttributeSet parents_;
    BitVector prefs_;
};

// Problem instance: an ordered tuple of complete CPTs over one universe.
class Instance {
public:
    Instance(int n, std::vector<Cpt> cpts);

    int n() const { return n_; }
    size_t t() const { return cpts_.size(); }
    const std::vector<Cpt>& cpts() const { return cpts_; }
    const Cpt& cpt(size_t s) const { return cpts_[s]; }
    uint64_t swap_count() const { return uint64_t(1) << (n_ - 1); }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    int n_;
    std::vector<Cpt> cpts_;
};

} // namespace cpta
