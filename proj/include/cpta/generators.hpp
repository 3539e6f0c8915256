#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cpta/model.hpp"

namespace cpta {

// Parameters for the `generate` CLI subcommand; the typed gen_* functions
// below are the library interface. generate() validates that exactly the
// parameters applicable to the family are present.
struct FamilySpec {
    std::string family; // tkn | symmetric-disjoint | copy-parent | random
    int n = 0;
    std::optional<int> k;           // tkn
    std::optional<int> t;           // symmetric-disjoint, random
    std::optional<int> max_parents; // random
    std::optional<uint64_t> seed;   // symmetric-disjoint, random
};

Instance generate(const FamilySpec& spec);

// One CPT per (k-subset P of the n-1 attributes, context γ of P): parents P,
// rule γ: 1≻0, all other contexts 0≻1. t = C(n-1,k)·2^k. Enumeration order:
// P by ascending bitmask, then γ by ascending index, so "input s" is
// reproducible. Requires n ≥ 3 and 2 ≤ k ≤ n-1.
Instance gen_tkn(int n, int k);

// t single-parent CPTs on pairwise disjoint parents (CPT s has parent s),
// each symmetric; the seed picks each CPT's polarity, copy (0:0≻1, 1:1≻0)
// or negate — both polarities are symmetric. Requires 3 ≤ t ≤ n-1.
Instance gen_symmetric_disjoint(int n, int t, uint64_t seed);

// n-1 copy-parent CPTs (CPT s has parent s, rules 0:0≻1, 1:1≻0), two rules
// each. Stand-in for the known worst case where the optimal parent set is
// the full attribute set while the input has only 2(n-1) rules; the
// original construction's rules are not available, this family exhibits the
// same property (verified exhaustively at n=4). Requires n ≥ 4.
Instance gen_copy_parent(int n);

// t CPTs, each with a parent-set size drawn uniformly from {0..max_parents},
// a uniform random set of that size, and uniform random preference bits.
// Deterministic across platforms for a fixed seed: all randomness comes from
// splitmix64 (see rng.hpp), one split stream per CPT, no library
// distributions.
Instance gen_random(int n, int t, int max_parents, uint64_t seed);

} // namespace cpta
