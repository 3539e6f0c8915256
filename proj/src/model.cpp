#include "cpta/model.hpp"

namespace cpta {

std::string context_string(uint32_t index, int k) {
    std::string s(static_cast<size_t>(k), '0');
    for (int j = 0; j < k; ++j)
        if ((index >> (k - 1 - j)) & 1u) s[static_cast<size_t>(j)] = '1';
    return s;
}

std::vector<Context> enumerate_contexts(AttributeSet parents) {
    int k = parents.count();
    std::vector<Context> out;
    out.reserve(size_t(1) << k);
    for (uint32_t idx = 0; idx < (uint32_t(1) << k); ++idx)
        out.push_back(Context{parents, idx});
    return out;
}

BitMover BitMover::restriction(AttributeSet from, AttributeSet to) {
    // to ⊆ from; bit of attribute a sits at (count-1 - rank) in each index
    BitMover m;
    int kf = from.count(), kt = to.count();
    for (int a : to.to_list())
        m.add(kf - 1 - from.rank_of(a), kt - 1 - to.rank_of(a));
    return m;
}

uint32_t restrict_index(uint32_t index, AttributeSet from, AttributeSet to) {
    return BitMover::restriction(from, to)(index);
}

Cpt::Cpt(int n, AttributeSet parents, BitVector prefs)
    : n_(n), parents_(parents), prefs_(std::move(prefs)) {
    if (n_ < 2 || n_ > kMaxN)
        throw ValidationError("attribute count must be in [2, " + std::to_string(kMaxN) +
                              "], got " + std::to_string(n_));
    if (!parents_.subset_of(AttributeSet::full(n_ - 1)))
        throw ValidationError("parent index exceeds " + std::to_string(n_ - 2) +
                              " (universe has " + std::to_string(n_ - 1) +
                              " potential parents)");
    uint64_t want = uint64_t(1) << parents_.count();
    if (prefs_.size() != want)
        throw ValidationError("CPT must be complete: expected " + std::to_string(want) +
                              " rules, got " + std::to_string(prefs_.size()));
}

Instance::Instance(int n, std::vector<Cpt> cpts) : n_(n), cpts_(std::move(cpts)) {
    if (cpts_.empty()) throw ValidationError("instance needs at least one CPT");
    if (n_ < 2 || n_ > kMaxN)
        throw ValidationError("attribute count must be in [2, " + std::to_string(kMaxN) +
                              "], got " + std::to_string(n_));
    for (const Cpt& c : cpts_)
        if (c.n() != n_)
            throw ValidationError("all CPTs must share the instance's attribute count");
}

} // namespace cpta
