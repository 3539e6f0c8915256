#include "cpta/formulas.hpp"

#include <algorithm>
#include <numeric>

#include "cpta/errors.hpp"

namespace cpta::formulas {

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    // r stays integral at every step: after multiplying by n-k+i it is
    // C(n-k+i, i) * i!, divisible by i
    for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
    return r;
}

Rational make_ratio(uint64_t num, uint64_t den) {
    if (den == 0) {
        if (num != 0) throw ValidationError("ratio with zero denominator");
        return Rational{1, 1}; // optimum 0 forces every objective to 0
    }
    const uint64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

uint64_t tkn_optimal(int n, int k) {
    return (uint64_t(1) << (n - 1)) * binomial(n - 1, k);
}

uint64_t tkn_best_input(int n, int k) {
    return ((uint64_t(1) << n) - (uint64_t(1) << (n - k))) * binomial(n - 1, k);
}

Rational tkn_trivial_ratio(int k) {
    return make_ratio((uint64_t(1) << k) - 1, uint64_t(1) << (k - 1));
}

uint64_t symmetric_disjoint_optimal(int n, int t) {
    const uint64_t base = uint64_t(t) << (n - 2);
    const int c = (t + 1) / 2;
    const uint64_t miss = (t % 2 != 0) ? uint64_t(c) * binomial(2 * c - 1, c)
                                       : uint64_t(c) * binomial(2 * c, c);
    return base - (miss << (n - t - 1));
}

uint64_t symmetric_disjoint_best_input(int n, int t) {
    return uint64_t(t - 1) << (n - 2);
}

} // namespace cpta::formulas
