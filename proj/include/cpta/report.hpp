#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpta/algorithms.hpp"
#include "cpta/formulas.hpp"

namespace cpta {

// One experiment: one generated instance solved by the exact, trivial and
// best-input-parent-set algorithms, with closed-form predictions where the
// family has them. Ratios are exact reduced fractions (rendered as decimals
// only for display); the 0/0 case is 1/1 (optimum 0 forces all measured
// objectives to 0).
struct ExperimentRow {
    std::string family;
    int n = 0;
    std::optional<int> k; // tkn only
    int t = 0;
    uint64_t f_opt = 0;
    uint64_t f_trivial = 0;
    uint64_t f_alg1 = 0;
    formulas::Rational ratio_trivial; // f_trivial / f_opt
    formulas::Rational ratio_alg1;    // f_alg1 / f_opt
    std::optional<uint64_t> formula_opt;   // closed-form optimum
    std::optional<uint64_t> formula_input; // closed-form best input
};

// Parameter sweep for one family. Interpretation:
//   tkn:                n in [n_min, n_max]; per n, k in
//                       [max(2, k_min), min(n-1, k_max)] (defaults 2, n-1)
//   symmetric-disjoint: t in [t_min, t_max] (default 3..n_max-1); per t,
//                       n in [max(t+1, n_min), n_max]; `seed` picks
//                       polarities
//   copy-parent:        n in [n_min, n_max]
//   random:             n = n_min = n_max, t = t_min = t_max, max_parents;
//                       one row per seed in [seed, seed + count)
struct SweepSpec {
    std::string family;
    int n_min = 0;
    int n_max = 0;
    std::optional<int> k_min, k_max;
    std::optional<int> t_min, t_max;
    std::optional<int> max_parents;
    uint64_t seed = 0;
    int count = 1;
};

// Rows in deterministic parameter order (instances may be solved
// concurrently; order never depends on completion order).
std::vector<ExperimentRow> run_sweep(const SweepSpec& spec, const Guards& guards = {});

// "# schema=1" comment line, fixed header, one line per row; empty cells
// for inapplicable k / unknown formulas
std::string csv_render(const std::vector<ExperimentRow>& rows);

// temp-file + rename: a failed sweep never leaves a partial CSV
void write_csv_atomic(const std::string& path, const std::vector<ExperimentRow>& rows);

} // namespace cpta
