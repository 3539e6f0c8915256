#include "cpta/algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <tuple>

#include "cpta/metrics.hpp"

namespace cpta {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

SolveReport finish(std::string algorithm, const Instance& inst, Cpt output,
                   std::optional<AttributeSet> chosen, Clock::time_point t0) {
    std::vector<uint64_t> per = per_input_disagreement(inst, output);
    uint64_t total = 0;
    for (uint64_t v : per) total += v;
    return SolveReport{std::move(algorithm), std::move(output), total,
                       std::move(per),       chosen,            ms_since(t0)};
}

void check_parent_guard(AttributeSet p, const Guards& guards) {
    if (p.count() > guards.max_parent_bits)
        throw ResourceLimitError("parent set has " + std::to_string(p.count()) +
                                 " attributes, needing a 2^" + std::to_string(p.count()) +
                                 "-rule table; guard allows " +
                                 std::to_string(guards.max_parent_bits));
}

// The majority construction for parents ⊆ p, before irrelevant-parent
// removal. For each context γ of p, every input rule whose context is
// consistent with γ casts 2^{n-1-|Pa_s|-|p \ Pa_s|} votes (its swaps split
// evenly over the consistent contexts of p); zero votes are counted, one
// votes are the remainder of t·2^{n-1-|p|}.
Cpt majority_for_parent_set(const Instance& inst, AttributeSet p) {
    const int n = inst.n();
    const int kp = p.count();

    struct Voter {
        BitMover shared;      // bits of γ shared with Pa_s, routed into a Pa_s context
        BitMover scatter;     // enumeration counter -> the free bits of a Pa_s context
        uint32_t free_count;  // number of consistent contexts per γ
        int weight_shift;     // zero votes per consistent zero-rule, as a power of two
        const BitVector* prefs;
    };
    std::vector<Voter> voters;
    voters.reserve(inst.t());
    for (const Cpt& c : inst.cpts()) {
        AttributeSet pa = c.parents();
        const int ks = pa.count();
        Voter v;
        for (int a : (pa & p).to_list())
            v.shared.add(kp - 1 - p.rank_of(a), ks - 1 - pa.rank_of(a));
        int j = 0;
        for (int a : (pa - p).to_list()) v.scatter.add(j++, ks - 1 - pa.rank_of(a));
        v.free_count = uint32_t(1) << j;
        v.weight_shift = (n - 1 - ks) - (p - pa).count();
        assert(v.weight_shift >= 0); // p \ Pa_s and Pa_s are disjoint within n-1 attributes
        v.prefs = &c.prefs();
        voters.push_back(std::move(v));
    }

    const uint64_t ncontexts = uint64_t(1) << kp;
    const uint64_t votes_per_context = uint64_t(inst.t()) << (n - 1 - kp);
    BitVector prefs(ncontexts);
    const int64_t nwords = int64_t(prefs.word_count());
#pragma omp parallel for schedule(static)
    for (int64_t w = 0; w < nwords; ++w) {
        // one whole word per iteration, so threads never share a word
        uint64_t word = 0;
        const uint64_t base = uint64_t(w) << 6;
        const int lim = int(std::min<uint64_t>(64, ncontexts - base));
        for (int b = 0; b < lim; ++b) {
            const uint32_t gamma = uint32_t(base + uint64_t(b));
            uint64_t zerovotes = 0;
            for (const Voter& v : voters) {
                const uint32_t fixed = v.shared(gamma);
                uint32_t cnt = 0;
                for (uint32_t f = 0; f < v.free_count; ++f)
                    cnt += uint32_t(!v.prefs->get(fixed | v.scatter(f)));
                zerovotes += uint64_t(cnt) << v.weight_shift;
            }
            // emit 0≻1 only on a strict zero majority; a tie gives 1≻0
            if (2 * zerovotes <= votes_per_context) word |= uint64_t(1) << b;
        }
        prefs.set_word(size_t(w), word);
    }
    return remove_irrelevant_parents(Cpt(n, p, std::move(prefs)));
}

} // namespace

SolveReport trivial_best_input(const Instance& inst) {
    const auto t0 = Clock::now();
    const int64_t t = int64_t(inst.t());
    std::vector<uint64_t> scores(inst.t());
#pragma omp parallel for schedule(dynamic)
    for (int64_t s = 0; s < t; ++s) scores[size_t(s)] = objective(inst, inst.cpt(size_t(s)));
    size_t best = 0;
    for (size_t s = 1; s < inst.t(); ++s)
        if (scores[s] < scores[best]) best = s;
    return finish("trivial", inst, inst.cpt(best), std::nullopt, t0);
}

SolveReport optimal_for_parent_set(const Instance& inst, AttributeSet p, const Guards& guards) {
    const auto t0 = Clock::now();
    if (!p.subset_of(AttributeSet::full(inst.n() - 1)))
        throw ValidationError("parent set outside the attribute universe");
    check_parent_guard(p, guards);
    return finish("fixed-parent", inst, majority_for_parent_set(inst, p), p, t0);
}

SolveReport best_input_parent_set(const Instance& inst, const Guards& guards) {
    const auto t0 = Clock::now();
    // distinct input parent sets in first-appearance order; with the strict
    // comparison below this breaks ties toward the lowest input index
    std::vector<AttributeSet> sets;
    for (const Cpt& c : inst.cpts())
        if (std::find(sets.begin(), sets.end(), c.parents()) == sets.end())
            sets.push_back(c.parents());
    for (AttributeSet p : sets) check_parent_guard(p, guards);

    std::optional<Cpt> best;
    AttributeSet chosen;
    uint64_t best_obj = 0;
    for (AttributeSet p : sets) {
        Cpt cand = majority_for_parent_set(inst, p);
        const uint64_t obj = objective(inst, cand);
        if (!best || obj < best_obj) {
            best = std::move(cand);
            best_obj = obj;
            chosen = p;
        }
    }
    return finish("alg1", inst, std::move(*best), chosen, t0);
}

SolveReport exact_union_majority(const Instance& inst, const Guards& guards) {
    const auto t0 = Clock::now();
    AttributeSet u;
    for (const Cpt& c : inst.cpts()) u = u | c.parents();
    check_parent_guard(u, guards);
    return finish("exact-union", inst, majority_for_parent_set(inst, u), u, t0);
}

SolveReport exhaustive_optimum(const Instance& inst, AttributeSet parent_pool,
                               const Guards& guards) {
    const auto t0 = Clock::now();
    if (!parent_pool.subset_of(AttributeSet::full(inst.n() - 1)))
        throw ValidationError("parent pool outside the attribute universe");
    if (parent_pool.count() > guards.max_exhaustive_pool)
        throw ResourceLimitError("exhaustive pool of " + std::to_string(parent_pool.count()) +
                                 " attributes means 2^" +
                                 std::to_string(uint64_t(1) << parent_pool.count()) +
                                 " tables per subset; guard allows " +
                                 std::to_string(guards.max_exhaustive_pool));

    struct Best {
        uint64_t obj = ~uint64_t(0);
        int pc = 0;
        uint32_t pbits = 0;
        uint64_t table = 0;
        std::tuple<uint64_t, int, uint32_t, uint64_t> key() const {
            return {obj, pc, pbits, table};
        }
    };
    Best global;

    const uint32_t pool = parent_pool.bits();
    // all subsets of the pool in ascending bitmask order
    uint32_t sbits = 0;
    do {
        AttributeSet p(sbits);
        const int pc = p.count();
        const uint64_t tbits = uint64_t(1) << pc;   // rules in a table over p
        const int64_t ntables = int64_t(1) << tbits; // tables to try
#pragma omp parallel
        {
            Best local;
#pragma omp for schedule(static) nowait
            for (int64_t tv = 0; tv < ntables; ++tv) {
                // table value -> prefs: context index i is bit i (LSB first)
                BitVector prefs(tbits);
                for (uint64_t i = 0; i < tbits; ++i) prefs.set(i, (uint64_t(tv) >> i) & 1);
                Cpt cand(inst.n(), p, std::move(prefs));
                const uint64_t obj = objective(inst, cand);
                Best mine{obj, pc, sbits, uint64_t(tv)};
                if (mine.key() < local.key()) local = mine;
            }
#pragma omp critical
            {
                // total-order merge: the same winner regardless of scheduling
                if (local.key() < global.key()) global = local;
            }
        }
        sbits = (sbits - pool) & pool;
    } while (sbits != 0);

    BitVector prefs(uint64_t(1) << global.pc);
    for (uint64_t i = 0; i < prefs.size(); ++i) prefs.set(i, (global.table >> i) & 1);
    Cpt winner(inst.n(), AttributeSet(global.pbits), std::move(prefs));
    return finish("exhaustive", inst, std::move(winner), parent_pool, t0);
}

Cpt remove_irrelevant_parents(const Cpt& c) {
    AttributeSet p = c.parents();
    BitVector prefs = c.prefs();
    bool changed = true;
    while (changed) {
        changed = false;
        const int k = p.count();
        for (int j = 0; j < k; ++j) { // ascending attribute order
            const int pos = k - 1 - j; // index bit of the j-th smallest parent
            const uint64_t lowmask = (uint64_t(1) << pos) - 1;
            const uint64_t half = uint64_t(1) << (k - 1);
            bool removable = true;
            for (uint64_t i = 0; i < half && removable; ++i) {
                const uint64_t at0 = ((i >> pos) << (pos + 1)) | (i & lowmask);
                removable = prefs.get(at0) == prefs.get(at0 | (uint64_t(1) << pos));
            }
            if (!removable) continue;
            BitVector reduced(half);
            for (uint64_t i = 0; i < half; ++i) {
                const uint64_t at0 = ((i >> pos) << (pos + 1)) | (i & lowmask);
                reduced.set(i, prefs.get(at0));
            }
            prefs = std::move(reduced);
            p = p - AttributeSet(uint32_t(1) << p.nth(j));
            changed = true;
            break; // restart the scan
        }
    }
    return Cpt(c.n(), p, std::move(prefs));
}

} // namespace cpta
