#pragma once

#include "boolcube/bigcount.hpp"

namespace boolcube {

// Closed forms. n = 0 is accepted and gives the empty-cube value 1.

// prod_{k=0}^n C(n,k)!  -- orderings compatible with weight (OEIS A051459).
BigCount count_weight_orders(unsigned n);
// prod_{k=0}^n C(n,k)  -- maximum chains under the weight order (A001142).
BigCount count_max_chains_wo(unsigned n);
// n!  -- maximum chains under coordinatewise precedence (A000142).
BigCount count_max_chains_precedes(unsigned n);

enum class ChainRelation { precedes, weight_order };

// Brute-force counterparts. Each throws std::length_error above its bound
// and std::domain_error for n = 0.

// Depth-first enumeration of chains that pick one vector per layer.
// Bounds: n <= 5 (precedes), n <= 4 (weight_order).
BigCount oracle_count_chains(unsigned n, ChainRelation relation);

// Linear extensions of the weight order, by dynamic programming over the
// sets of already placed vectors. n <= 3.
BigCount oracle_count_linear_extensions(unsigned n);
// The same count by filtering all (2^n)! permutations. n <= 3.
BigCount oracle_count_linear_extensions_by_permutation(unsigned n);

// Number of shortest 0_n -> 1_n paths in the cube graph, by BFS. n <= 10.
BigCount oracle_count_shortest_paths(unsigned n);

}  // namespace boolcube
