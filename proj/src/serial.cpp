#include "cpta/serial.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

namespace cpta::serial {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

SolveReport finish(std::string algorithm, const Instance& inst, Cpt output,
                   std::optional<AttributeSet> chosen, Clock::time_point t0) {
    std::vector<uint64_t> per(inst.t());
    uint64_t total = 0;
    for (size_t s = 0; s < inst.t(); ++s) {
        per[s] = serial::swap_disagreement(output, inst.cpt(s));
        total += per[s];
    }
    return SolveReport{std::move(algorithm), std::move(output), total,
                       std::move(per),       chosen,            ms_since(t0)};
}

} // namespace

uint64_t swap_disagreement(const Cpt& a, const Cpt& b) {
    if (a.n() != b.n())
        throw ValidationError("CPTs live in different universes (n = " +
                              std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
    // definitional: walk all 2^{n-1} swaps and compare the entailed votes
    AttributeSet all = AttributeSet::full(a.n() - 1);
    BitMover ga = BitMover::restriction(all, a.parents());
    BitMover gb = BitMover::restriction(all, b.parents());
    uint64_t d = 0;
    for (uint64_t mu = 0; mu < (uint64_t(1) << (a.n() - 1)); ++mu)
        d += uint64_t(a.pref(ga(uint32_t(mu))) != b.pref(gb(uint32_t(mu))));
    return d;
}

uint64_t objective(const Instance& inst, const Cpt& cand) {
    if (cand.n() != inst.n())
        throw ValidationError("candidate universe does not match the instance");
    uint64_t total = 0;
    for (const Cpt& c : inst.cpts()) total += serial::swap_disagreement(cand, c);
    return total;
}

VoteMatrix build_matrix(const Instance& inst, int max_matrix_n) {
    if (inst.n() > max_matrix_n)
        throw ResourceLimitError("vote matrix needs 2^" + std::to_string(inst.n() - 1) +
                                 " rows; guard allows n <= " + std::to_string(max_matrix_n));
    AttributeSet all = AttributeSet::full(inst.n() - 1);
    VoteMatrix m;
    m.n = inst.n();
    m.t = uint32_t(inst.t());
    for (uint64_t mu = 0; mu < inst.swap_count(); ++mu) {
        BitVector row(m.t);
        for (uint32_t v = 0; v < m.t; ++v) {
            const Cpt& c = inst.cpt(v);
            row.set(v, c.pref(restrict_index(uint32_t(mu), all, c.parents())));
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

uint64_t majority_lower_bound(const VoteMatrix& m) {
    uint64_t total = 0;
    for (const BitVector& row : m.rows) {
        uint64_t ones = 0;
        for (uint32_t v = 0; v < m.t; ++v) ones += row.get(v);
        total += std::min(ones, uint64_t(m.t) - ones);
    }
    return total;
}

SolveReport optimal_for_parent_set(const Instance& inst, AttributeSet p, const Guards& guards) {
    const auto t0 = Clock::now();
    if (!p.subset_of(AttributeSet::full(inst.n() - 1)))
        throw ValidationError("parent set outside the attribute universe");
    if (p.count() > guards.max_parent_bits)
        throw ResourceLimitError("parent set has " + std::to_string(p.count()) +
                                 " attributes; guard allows " +
                                 std::to_string(guards.max_parent_bits));
    const int n = inst.n();
    const int kp = p.count();
    const uint64_t ncontexts = uint64_t(1) << kp;
    const uint64_t votes_per_context = uint64_t(inst.t()) << (n - 1 - kp);
    BitVector prefs(ncontexts);
    for (uint64_t gamma = 0; gamma < ncontexts; ++gamma) {
        uint64_t zerovotes = 0;
        for (const Cpt& c : inst.cpts()) {
            AttributeSet pa = c.parents();
            AttributeSet shared = pa & p;
            // test every rule of this input for consistency with gamma
            BitMover from_pa = BitMover::restriction(pa, shared);
            BitMover from_p = BitMover::restriction(p, shared);
            const uint32_t want = from_p(uint32_t(gamma));
            uint64_t rules = 0;
            for (uint32_t delta = 0; delta < (uint32_t(1) << pa.count()); ++delta)
                if (from_pa(delta) == want && !c.pref(delta)) ++rules;
            const int shift = (n - 1 - pa.count()) - (p - pa).count();
            zerovotes += rules << shift;
        }
        prefs.set(gamma, 2 * zerovotes <= votes_per_context);
    }
    Cpt out = remove_irrelevant_parents(Cpt(n, p, std::move(prefs)));
    return finish("fixed-parent", inst, std::move(out), p, t0);
}

SolveReport exhaustive_optimum(const Instance& inst, AttributeSet parent_pool,
                               const Guards& guards) {
    const auto t0 = Clock::now();
    if (!parent_pool.subset_of(AttributeSet::full(inst.n() - 1)))
        throw ValidationError("parent pool outside the attribute universe");
    if (parent_pool.count() > guards.max_exhaustive_pool)
        throw ResourceLimitError("exhaustive pool of " + std::to_string(parent_pool.count()) +
                                 " attributes; guard allows " +
                                 std::to_string(guards.max_exhaustive_pool));

    std::optional<Cpt> best;
    std::tuple<uint64_t, int, uint32_t, uint64_t> best_key;
    const uint32_t pool = parent_pool.bits();
    uint32_t sbits = 0;
    do {
        AttributeSet p(sbits);
        const uint64_t tbits = uint64_t(1) << p.count();
        for (uint64_t tv = 0; tv < (uint64_t(1) << tbits); ++tv) {
            BitVector prefs(tbits);
            for (uint64_t i = 0; i < tbits; ++i) prefs.set(i, (tv >> i) & 1);
            Cpt cand(inst.n(), p, std::move(prefs));
            const uint64_t obj = serial::objective(inst, cand);
            std::tuple<uint64_t, int, uint32_t, uint64_t> key{obj, p.count(), sbits, tv};
            if (!best || key < best_key) {
                best = std::move(cand);
                best_key = key;
            }
        }
        sbits = (sbits - pool) & pool;
    } while (sbits != 0);
    return finish("exhaustive", inst, std::move(*best), parent_pool, t0);
}

} // namespace cpta::serial
