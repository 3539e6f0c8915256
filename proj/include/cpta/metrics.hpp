#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cpta/model.hpp"

namespace cpta {

// build_matrix materializes 2^{n-1} rows; debugging/oracle facility only.
inline constexpr int kDefaultMatrixN = 20;

// Explicit vote matrix: row μ = instantiation of attributes 0..n-2 (same
// MSB-first indexing as contexts), column ν = input CPT ν; entry 1 = that
// input votes 1≻0 on the swap.
struct VoteMatrix {
    int n = 0;
    uint32_t t = 0;
    std::vector<BitVector> rows; // 2^{n-1} rows, t bits each

    uint64_t row_count() const { return rows.size(); }
};

// Count of swaps per voting configuration (distinct matrix row vector);
// keys are the packed words of the row bit vector.
struct ConfigHistogram {
    uint32_t t = 0;
    std::map<std::vector<uint64_t>, uint64_t> counts;
};

// Number of swaps (out of 2^{n-1}) the two CPTs order oppositely. Computed
// context-wise over P_a ∪ P_b (cost 2^{|P_a ∪ P_b|}, polynomial in the two
// table sizes), then scaled by the number of swaps per union context.
uint64_t swap_disagreement(const Cpt& a, const Cpt& b);

// f_T(cand) = Σ_s Δ(cand, N_s)
uint64_t objective(const Instance& inst, const Cpt& cand);

// the t individual Δ(cand, N_s) values, in input order
std::vector<uint64_t> per_input_disagreement(const Instance& inst, const Cpt& cand);

// Materializes the full vote matrix. Throws ResourceLimitError when
// inst.n() > max_matrix_n.
VoteMatrix build_matrix(const Instance& inst, int max_matrix_n = kDefaultMatrixN);

// Sub-matrix selection for freq: optional row filter (rows whose
// instantiation restricted to row_filter.parents equals row_filter.index)
// and optional column subset. Defaults select the whole matrix.
struct FreqSelection {
    std::optional<Context> row_filter;
    std::optional<std::vector<uint32_t>> columns;
};

struct FreqResult {
    uint64_t zeros = 0;
    uint64_t ones = 0;
};

// Vote counts over the selection; zeros + ones = #rows * #columns selected.
FreqResult freq(const VoteMatrix& m, const FreqSelection& sel = {});

ConfigHistogram config_histogram(const VoteMatrix& m);

// Σ over rows of min(zeros, ones) in the row: the objective of the per-swap
// majority, which a CPT over the full attribute set realizes — so this is
// the unconstrained optimum. Test oracle for the exact solvers.
uint64_t majority_lower_bound(const VoteMatrix& m);

// A CPT is symmetric iff it has at least one parent and, for every proper
// subset S of its parents (S = ∅ included) and every context of S, the
// rules extending that context split evenly between 0≻1 and 1≻0.
// Convention (the defining text leaves both open): separable CPTs are not
// symmetric, and S = ∅ counts as a proper subset — chosen so that the
// balanced-column and half-swap-disagreement facts about symmetric inputs
// hold literally.
bool is_symmetric(const Cpt& c);

} // namespace cpta
