// Speed comparison of the OpenMP kernels against the serial reference
// implementations (cpta::serial). Every kernel is checked for exact
// agreement before it is timed; a mismatch fails the run. Timings are
// best-of-3 on warm code paths. Not a ctest target — run by hand:
//   ./build/bench/cpta-bench

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cpta/algorithms.hpp"
#include "cpta/generators.hpp"
#include "cpta/metrics.hpp"
#include "cpta/rng.hpp"
#include "cpta/serial.hpp"

using namespace cpta;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double best_of_3_ms(F&& f) {
    double best = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = Clock::now();
        f();
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (rep == 0 || ms < best) best = ms;
    }
    return best;
}

Cpt random_table_cpt(int n, AttributeSet parents, uint64_t seed) {
    SplitMix64 rng(seed);
    BitVector prefs(uint64_t(1) << parents.count());
    for (size_t w = 0; w < prefs.word_count(); ++w) prefs.set_word(w, rng.next());
    return Cpt(n, parents, std::move(prefs));
}

bool reports_agree(const SolveReport& a, const SolveReport& b) {
    return a.objective == b.objective && a.output == b.output &&
           a.per_input == b.per_input && a.chosen_parents == b.chosen_parents;
}

int mismatches = 0;

void row(const std::string& kernel, double serial_ms, double parallel_ms, bool agree) {
    if (!agree) ++mismatches;
    std::printf("%-44s %11.1f %13.1f %8.1fx   %s\n", kernel.c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms, agree ? "yes" : "NO");
    std::fflush(stdout);
}

} // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());
    std::printf("%-44s %11s %13s %9s   %s\n", "kernel", "serial_ms", "parallel_ms",
                "speedup", "agree");

    {
        // two dense tables over overlapping 20-parent sets; the union covers
        // all 22 attributes, so both paths visit 2^22 contexts
        const int n = 23;
        const Cpt a = random_table_cpt(n, AttributeSet((1u << 20) - 1), 101);
        const Cpt b = random_table_cpt(n, AttributeSet(((1u << 20) - 1) << 2), 102);
        uint64_t got_par = 0, got_ser = 0;
        const double par = best_of_3_ms([&] { got_par = swap_disagreement(a, b); });
        const double ser = best_of_3_ms([&] { got_ser = serial::swap_disagreement(a, b); });
        row("swap-disagreement n=23, |Pa|=20 each", ser, par, got_par == got_ser);
    }

    {
        const Instance inst = gen_random(15, 24, 9, 7);
        const AttributeSet p = AttributeSet::full(14);
        SolveReport rp = optimal_for_parent_set(inst, p); // warm-up
        SolveReport rs = serial::optimal_for_parent_set(inst, p);
        const double par = best_of_3_ms([&] { rp = optimal_for_parent_set(inst, p); });
        const double ser =
            best_of_3_ms([&] { rs = serial::optimal_for_parent_set(inst, p); });
        row("fixed-parent solve n=15, t=24, |p|=14", ser, par, reports_agree(rp, rs));
    }

    {
        const Instance inst = gen_random(18, 32, 10, 3);
        VoteMatrix mp, ms;
        uint64_t lp = 0, ls = 0;
        const double par = best_of_3_ms([&] {
            mp = build_matrix(inst);
            lp = majority_lower_bound(mp);
        });
        const double ser = best_of_3_ms([&] {
            ms = serial::build_matrix(inst);
            ls = serial::majority_lower_bound(ms);
        });
        const bool agree = lp == ls && mp.n == ms.n && mp.t == ms.t && mp.rows == ms.rows;
        row("vote matrix + majority bound n=18, t=32", ser, par, agree);
    }

    {
        const Instance inst = gen_random(5, 12, 4, 5);
        const AttributeSet pool = AttributeSet::full(4);
        SolveReport rp = exhaustive_optimum(inst, pool); // warm-up
        SolveReport rs = serial::exhaustive_optimum(inst, pool);
        const double par = best_of_3_ms([&] { rp = exhaustive_optimum(inst, pool); });
        const double ser = best_of_3_ms([&] { rs = serial::exhaustive_optimum(inst, pool); });
        row("exhaustive search n=5, t=12, pool={0..3}", ser, par, reports_agree(rp, rs));
    }

    if (mismatches > 0) {
        std::printf("\n%d kernel(s) disagreed with the serial reference\n", mismatches);
        return 1;
    }
    return 0;
}
