#include "cpta/generators.hpp"

#include <numeric>
#include <utility>

#include "cpta/rng.hpp"

namespace cpta {

namespace {

// copy polarity: 0 ↦ 0≻1, 1 ↦ 1≻0; negate flips both rules. Either way the
// lone parent is relevant and both rule columns are balanced, i.e. the CPT
// is symmetric.
Cpt single_parent_cpt(int n, int parent, bool negate) {
    BitVector prefs(2);
    prefs.set(0, negate);
    prefs.set(1, !negate);
    return Cpt(n, AttributeSet(uint32_t(1) << parent), std::move(prefs));
}

BitVector random_bits(SplitMix64& rng, uint64_t nbits) {
    BitVector v(nbits);
    for (size_t w = 0; w < v.word_count(); ++w) v.set_word(w, rng.next());
    return v; // set_word zeroes the tail past nbits
}

} // namespace

Instance gen_tkn(int n, int k) {
    if (n < 3 || n > kMaxN)
        throw ValidationError("tkn family needs 3 <= n <= " + std::to_string(kMaxN));
    if (k < 2 || k > n - 1) throw ValidationError("tkn family needs 2 <= k <= n-1");
    std::vector<Cpt> cpts;
    const uint32_t limit = uint32_t(1) << (n - 1);
    // k-subsets in ascending bitmask order (Gosper), contexts in ascending
    // index order: input s is a reproducible function of (subset, context)
    for (uint32_t mask = (uint32_t(1) << k) - 1; mask < limit;) {
        for (uint32_t gamma = 0; gamma < (uint32_t(1) << k); ++gamma) {
            BitVector prefs(uint64_t(1) << k);
            prefs.set(gamma, true); // 1≻0 exactly at this CPT's own context
            cpts.emplace_back(n, AttributeSet(mask), std::move(prefs));
        }
        const uint32_t c = mask & (0 - mask);
        const uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return Instance(n, std::move(cpts));
}

Instance gen_symmetric_disjoint(int n, int t, uint64_t seed) {
    if (n < 4 || n > kMaxN)
        throw ValidationError("symmetric-disjoint family needs 4 <= n <= " +
                              std::to_string(kMaxN));
    if (t < 3 || t > n - 1)
        throw ValidationError("symmetric-disjoint family needs 3 <= t <= n-1");
    SplitMix64 rng(seed);
    std::vector<Cpt> cpts;
    cpts.reserve(size_t(t));
    for (int s = 0; s < t; ++s) cpts.push_back(single_parent_cpt(n, s, rng.bit()));
    return Instance(n, std::move(cpts));
}

Instance gen_copy_parent(int n) {
    if (n < 4 || n > kMaxN)
        throw ValidationError("copy-parent family needs 4 <= n <= " + std::to_string(kMaxN));
    std::vector<Cpt> cpts;
    cpts.reserve(size_t(n - 1));
    for (int s = 0; s < n - 1; ++s) cpts.push_back(single_parent_cpt(n, s, false));
    return Instance(n, std::move(cpts));
}

Instance gen_random(int n, int t, int max_parents, uint64_t seed) {
    if (n < 2 || n > kMaxN)
        throw ValidationError("random family needs 2 <= n <= " + std::to_string(kMaxN));
    if (t < 1) throw ValidationError("random family needs t >= 1");
    if (max_parents < 0 || max_parents > n - 1)
        throw ValidationError("random family needs 0 <= max-parents <= n-1");
    SplitMix64 root(seed);
    std::vector<Cpt> cpts;
    cpts.reserve(size_t(t));
    for (int i = 0; i < t; ++i) {
        SplitMix64 rng = root.split(uint64_t(i)); // one stream per CPT
        const int size = int(rng.below(uint64_t(max_parents) + 1));
        // uniform size-subset by partial Fisher-Yates
        std::vector<int> attrs(size_t(n - 1));
        std::iota(attrs.begin(), attrs.end(), 0);
        uint32_t bits = 0;
        for (int j = 0; j < size; ++j) {
            std::swap(attrs[size_t(j)], attrs[size_t(j) + size_t(rng.below(uint64_t(n - 1 - j)))]);
            bits |= uint32_t(1) << attrs[size_t(j)];
        }
        BitVector prefs = random_bits(rng, uint64_t(1) << size);
        cpts.emplace_back(n, AttributeSet(bits), std::move(prefs));
    }
    return Instance(n, std::move(cpts));
}

Instance generate(const FamilySpec& spec) {
    auto need = [&](bool ok, const char* flag) {
        if (!ok)
            throw ValidationError("family " + spec.family + " requires " + flag);
    };
    auto reject = [&](bool absent, const char* flag) {
        if (!absent)
            throw ValidationError(std::string(flag) + " does not apply to family " + spec.family);
    };
    if (spec.family == "tkn") {
        need(spec.k.has_value(), "--k");
        reject(!spec.t, "--t");
        reject(!spec.max_parents, "--max-parents");
        reject(!spec.seed, "--seed");
        return gen_tkn(spec.n, *spec.k);
    }
    if (spec.family == "symmetric-disjoint") {
        need(spec.t.has_value(), "--t");
        reject(!spec.k, "--k");
        reject(!spec.max_parents, "--max-parents");
        return gen_symmetric_disjoint(spec.n, *spec.t, spec.seed.value_or(0));
    }
    if (spec.family == "copy-parent") {
        reject(!spec.k, "--k");
        reject(!spec.t, "--t");
        reject(!spec.max_parents, "--max-parents");
        reject(!spec.seed, "--seed");
        return gen_copy_parent(spec.n);
    }
    if (spec.family == "random") {
        need(spec.t.has_value(), "--t");
        need(spec.max_parents.has_value(), "--max-parents");
        reject(!spec.k, "--k");
        return gen_random(spec.n, *spec.t, *spec.max_parents, spec.seed.value_or(0));
    }
    throw ValidationError("unknown family \"" + spec.family +
                          "\" (expected tkn, symmetric-disjoint, copy-parent, or random)");
}

} // namespace cpta
