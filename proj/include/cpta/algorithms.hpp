#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpta/model.hpp"

namespace cpta {

// Resource guards. Exceeding one throws ResourceLimitError (never silent
// truncation). CLI flags --max-parent-bits / --max-matrix-n override the
// defaults.
struct Guards {
    int max_parent_bits = 24;   // optimal_for_parent_set builds a 2^{|p|} table
    int max_exhaustive_pool = 4; // exhaustive_optimum enumerates 2^{2^{|pool|}} tables
};

struct SolveReport {
    std::string algorithm;      // trivial | alg1 | fixed-parent | exact-union | exhaustive
    Cpt output;
    uint64_t objective = 0;     // == sum of per_input
    std::vector<uint64_t> per_input;
    std::optional<AttributeSet> chosen_parents; // superset of output.parents when set
    double wall_time_ms = 0.0;
};

// Output the input CPT minimizing f_T; ties to the lowest input index.
// 2-approximation of the optimum.
SolveReport trivial_best_input(const Instance& inst);

// Minimize f_T over all CPTs with parents ⊆ p: for each context γ of p,
// weigh each input rule consistent with γ by the number of swaps it covers
// (numRules · 2^{n-|Pa_s|-1} / 2^{|p \ Pa_s|}, an exact power-of-two shift)
// and emit the majority preference; ties (zerovotes = onevotes) emit 1≻0,
// mirroring the strict zerovotes > onevotes comparison. Irrelevant parents
// are removed from the output (semantics unchanged).
SolveReport optimal_for_parent_set(const Instance& inst, AttributeSet p,
                                   const Guards& guards = {});

// Minimize f_T over CPTs whose parent set is contained in SOME input's
// parent set: run optimal_for_parent_set once per distinct input parent
// set, keep the best; ties to the lowest input index. Never worse than
// trivial_best_input. CLI tag: "alg1".
SolveReport best_input_parent_set(const Instance& inst, const Guards& guards = {});

// Global optimum: optimal_for_parent_set over the union of all input parent
// sets (per-swap majority realized on the union).
SolveReport exact_union_majority(const Instance& inst, const Guards& guards = {});

// Independent oracle: enumerate every complete CPT with parents ⊆ pool
// (every subset, every preference table) and return a minimizer. Ties break
// by smaller parent count, then lower parent bitmask, then lower table
// value, where the table value reads prefs as an integer with context 0 as
// the least significant bit.
SolveReport exhaustive_optimum(const Instance& inst, AttributeSet parent_pool,
                               const Guards& guards = {});

// Drop every parent whose value never affects the entailed preference:
// scan parents in ascending order, restart after each removal, until no
// parent is removable. Δ(input, output) = 0.
Cpt remove_irrelevant_parents(const Cpt& c);

} // namespace cpta
