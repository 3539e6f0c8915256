#pragma once

#include <cstdint>

namespace cpta::formulas {

// exact C(n,k); arguments small enough (n ≤ 60 in all callers) that the
// result fits uint64
uint64_t binomial(int n, int k);

// Reduced fraction. Experiment ratios are kept exact so "ratio = 4/3" is a
// machine-checkable equality, not a float comparison.
struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

// num/den reduced; the 0/0 case (optimum 0 forces every measured objective
// to 0) is defined as 1/1
Rational make_ratio(uint64_t num, uint64_t den);

// --- closed forms for the T^{k,n} family -----------------------------------

// optimum: 2^{n-1} · C(n-1,k)
uint64_t tkn_optimal(int n, int k);

// best single input: (2^n − 2^{n-k}) · C(n-1,k)
uint64_t tkn_best_input(int n, int k);

// best-input / optimum = 2 − 2^{1-k} = (2^k − 1) / 2^{k-1}; with k = n-1
// this is 2 − 2^{2-n}, increasing toward the general bound 2
Rational tkn_trivial_ratio(int k);

// --- closed forms for symmetric instances with pairwise disjoint parents ---

// optimum: t·2^{n-2} − 2^{n-t-1}·c·C(2c-1,c) with t = 2c-1 odd,
//          t·2^{n-2} − 2^{n-t-1}·c·C(2c,c)   with t = 2c   even
uint64_t symmetric_disjoint_optimal(int n, int t);

// best single input: (t-1) · 2^{n-2}
uint64_t symmetric_disjoint_best_input(int n, int t);

} // namespace cpta::formulas
