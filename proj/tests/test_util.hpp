#pragma once

// Shared test helpers: terse CPT builders plus a brute-force evaluator that
// reads votes straight off the swap rows, independent of the BitMover
// plumbing the library uses.

#include <cstdint>
#include <initializer_list>
#include <string>

#include "cpta/model.hpp"

namespace testutil {

inline cpta::AttributeSet attrs(std::initializer_list<int> list) {
    uint32_t bits = 0;
    for (int a : list) bits |= uint32_t(1) << a;
    return cpta::AttributeSet(bits);
}

// prefs as a string over ascending context index: "0010" puts 1≻0 at
// context index 2 (= context string "10")
inline cpta::Cpt make_cpt(int n, std::initializer_list<int> parents, const std::string& prefs) {
    cpta::BitVector bits(prefs.size());
    for (size_t i = 0; i < prefs.size(); ++i) bits.set(i, prefs[i] == '1');
    return cpta::Cpt(n, attrs(parents), std::move(bits));
}

// vote of `c` on swap row `row`, by direct bit extraction (row bits are
// MSB-first over attributes 0..n-2, like context indices)
inline bool vote_at_row(const cpta::Cpt& c, uint32_t row) {
    uint32_t idx = 0;
    for (int a : c.parents().to_list()) idx = (idx << 1) | ((row >> (c.n() - 2 - a)) & 1u);
    return c.pref(idx);
}

inline uint64_t brute_delta(const cpta::Cpt& a, const cpta::Cpt& b) {
    uint64_t d = 0;
    const uint64_t rows = uint64_t(1) << (a.n() - 1);
    for (uint64_t r = 0; r < rows; ++r)
        d += vote_at_row(a, uint32_t(r)) != vote_at_row(b, uint32_t(r));
    return d;
}

inline uint64_t brute_objective(const cpta::Instance& inst, const cpta::Cpt& cand) {
    uint64_t f = 0;
    for (const cpta::Cpt& c : inst.cpts()) f += brute_delta(cand, c);
    return f;
}

} // namespace testutil
