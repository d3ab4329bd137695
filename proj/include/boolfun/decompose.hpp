#pragma once

#include <cstdint>
#include <vector>

#include "boolfun/boolean_function.hpp"
#include "boolfun/set_partition.hpp"

namespace boolfun {

// An ordered factorization of a function into indecomposable components: the
// blocks form a composition of the ground set and f equals the star product of
// its restrictions to the blocks, in order, under the recorded parameters.
struct Decomposition {
  std::vector<std::uint32_t> blocks;
  QPair q;
};

// f(A) = sum of f over the singletons of A, for every A.
bool is_modular(const BooleanFunction& f);

// No proper ordered bipartition (X∖Y, Y) of the ground set satisfies
// f = f|(X∖Y) * f|Y. The only candidate factors are the restrictions, so the
// search runs over the 2^n - 2 proper subsets Y.
bool is_indecomposable(const BooleanFunction& f, QPair q);

// Same test applied to the restriction of f to a subset, without re-indexing.
bool restriction_indecomposable(const BooleanFunction& f, std::uint32_t subset,
                                QPair q);

// Recursive splitting; among the valid ordered bipartitions of a block the one
// whose first part has the smallest bitmask is taken.
Decomposition decompose(const BooleanFunction& f, QPair q);

// The unique partition whose blocks restrict f to indecomposable factors with
// f equal to their product under q1 = q2 = 1.
SetPartition component_partition(const BooleanFunction& f);

// Number of indecomposable components under q1 = q2 = 1; 0 for the unit.
int ic(const BooleanFunction& f);

// f * g = g * f after aligning the embedding of the two ground sets.
bool commutes(const BooleanFunction& f, const BooleanFunction& g, QPair q);

}  // namespace boolfun
