#pragma once

#include "cpta/algorithms.hpp"
#include "cpta/metrics.hpp"
#include "cpta/model.hpp"

// Serial reference implementations of the parallel kernels. These are not
// de-parallelized copies: each one follows the definitions directly (e.g.
// swap_disagreement walks all 2^{n-1} swaps instead of union contexts, the
// fixed-parent solver tests every input rule for consistency instead of
// enumerating the consistent ones). Tests assert bit-identical agreement
// with the cpta:: versions; bench/ compares their speed.
namespace cpta::serial {

uint64_t swap_disagreement(const Cpt& a, const Cpt& b);
uint64_t objective(const Instance& inst, const Cpt& cand);
VoteMatrix build_matrix(const Instance& inst, int max_matrix_n = kDefaultMatrixN);
uint64_t majority_lower_bound(const VoteMatrix& m);
SolveReport optimal_for_parent_set(const Instance& inst, AttributeSet p,
                                   const Guards& guards = {});
SolveReport exhaustive_optimum(const Instance& inst, AttributeSet parent_pool,
                               const Guards& guards = {});

} // namespace cpta::serial
