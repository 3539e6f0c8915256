#include "cpta/metrics.hpp"

#include <algorithm>

namespace cpta {

namespace {
void check_same_universe(const Cpt& a, const Cpt& b) {
    if (a.n() != b.n())
        throw ValidationError("CPTs live in different universes (n = " +
                              std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
}
} // namespace

uint64_t swap_disagreement(const Cpt& a, const Cpt& b) {
    check_same_universe(a, b);
    // Two swaps with the same instantiation of P_a ∪ P_b get the same vote
    // pair, so count disagreements over union contexts and scale.
    AttributeSet u = a.parents() | b.parents();
    int ku = u.count();
    BitMover ga = BitMover::restriction(u, a.parents());
    BitMover gb = BitMover::restriction(u, b.parents());
    uint64_t d = 0;
    const int64_t limit = int64_t(1) << ku;
#pragma omp parallel for schedule(static) reduction(+ : d) if (limit >= (int64_t(1) << 14))
    for (int64_t idx = 0; idx < limit; ++idx) {
        uint32_t c = uint32_t(idx);
        d += uint64_t(a.pref(ga(c)) != b.pref(gb(c)));
    }
    return d << ((a.n() - 1) - ku);
}

uint64_t objective(const Instance& inst, const Cpt& cand) {
    if (cand.n() != inst.n())
        throw ValidationError("candidate universe does not match the instance");
    uint64_t total = 0;
    const int64_t t = int64_t(inst.t());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (int64_t s = 0; s < t; ++s) total += swap_disagreement(cand, inst.cpt(size_t(s)));
    return total;
}

std::vector<uint64_t> per_input_disagreement(const Instance& inst, const Cpt& cand) {
    if (cand.n() != inst.n())
        throw ValidationError("candidate universe does not match the instance");
    std::vector<uint64_t> out(inst.t());
    const int64_t t = int64_t(inst.t());
#pragma omp parallel for schedule(dynamic)
    for (int64_t s = 0; s < t; ++s) out[size_t(s)] = swap_disagreement(cand, inst.cpt(size_t(s)));
    return out;
}

VoteMatrix build_matrix(const Instance& inst, int max_matrix_n) {
    if (inst.n() > max_matrix_n)
        throw ResourceLimitError("vote matrix needs 2^" + std::to_string(inst.n() - 1) +
                                 " rows; guard allows n <= " + std::to_string(max_matrix_n));
    const int n = inst.n();
    const uint32_t t = uint32_t(inst.t());
    AttributeSet all = AttributeSet::full(n - 1);
    std::vector<BitMover> gather;
    gather.reserve(t);
    for (const Cpt& c : inst.cpts()) gather.push_back(BitMover::restriction(all, c.parents()));

    VoteMatrix m;
    m.n = n;
    m.t = t;
    m.rows.assign(size_t(1) << (n - 1), BitVector());
    const int64_t nrows = int64_t(m.rows.size());
#pragma omp parallel for schedule(static)
    for (int64_t mu = 0; mu < nrows; ++mu) {
        BitVector row(t);
        for (uint32_t v = 0; v < t; ++v)
            row.set(v, inst.cpt(v).pref(gather[v](uint32_t(mu))));
        m.rows[size_t(mu)] = std::move(row);
    }
    return m;
}

FreqResult freq(const VoteMatrix& m, const FreqSelection& sel) {
    std::optional<BitMover> gather;
    uint32_t want = 0;
    if (sel.row_filter) {
        AttributeSet all = AttributeSet::full(m.n - 1);
        if (!sel.row_filter->parents.subset_of(all))
            throw ValidationError("row-filter attribute outside the universe");
        int k = sel.row_filter->parents.count();
        if (uint64_t(sel.row_filter->index) >= (uint64_t(1) << k))
            throw ValidationError("row-filter context index out of range");
        gather = BitMover::restriction(all, sel.row_filter->parents);
        want = sel.row_filter->index;
    }
    if (sel.columns) {
        if (sel.columns->empty()) throw ValidationError("empty column subset");
        for (uint32_t c : *sel.columns)
            if (c >= m.t) throw ValidationError("column " + std::to_string(c) + " out of range");
    }

    uint64_t ones = 0, selected = 0;
    for (uint64_t mu = 0; mu < m.row_count(); ++mu) {
        if (gather && (*gather)(uint32_t(mu)) != want) continue;
        const BitVector& row = m.rows[size_t(mu)];
        if (sel.columns) {
            for (uint32_t c : *sel.columns) ones += row.get(c);
            selected += sel.columns->size();
        } else {
            ones += row.count_ones();
            selected += m.t;
        }
    }
    return FreqResult{selected - ones, ones};
}

ConfigHistogram config_histogram(const VoteMatrix& m) {
    ConfigHistogram h;
    h.t = m.t;
    for (const BitVector& row : m.rows) {
        std::vector<uint64_t> key(row.word_count());
        for (size_t w = 0; w < key.size(); ++w) key[w] = row.word(w);
        ++h.counts[std::move(key)];
    }
    return h;
}

uint64_t majority_lower_bound(const VoteMatrix& m) {
    uint64_t total = 0;
    const int64_t nrows = int64_t(m.row_count());
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (int64_t mu = 0; mu < nrows; ++mu) {
        uint64_t ones = m.rows[size_t(mu)].count_ones();
        total += std::min(ones, uint64_t(m.t) - ones);
    }
    return total;
}

bool is_symmetric(const Cpt& c) {
    const int k = c.parent_count();
    if (k == 0) return false; // separable CPTs are non-symmetric by convention
    const uint32_t pbits = c.parents().bits();
    const uint32_t ncontexts = uint32_t(1) << k;
    // every proper subset S of the parents, the empty set included
    for (uint32_t sbits = (pbits - 1) & pbits;; sbits = (sbits - 1) & pbits) {
        AttributeSet sub(sbits);
        const int ks = sub.count();
        BitMover g = BitMover::restriction(c.parents(), sub);
        std::vector<uint64_t> ones(size_t(1) << ks, 0);
        for (uint32_t idx = 0; idx < ncontexts; ++idx) ones[g(idx)] += c.pref(idx);
        const uint64_t half = uint64_t(1) << (k - ks - 1);
        for (uint64_t o : ones)
            if (o != half) return false;
        if (sbits == 0) break;
    }
    return true;
}

} // namespace cpta
