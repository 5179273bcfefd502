#pragma once

#include <vector>

#include "expcircle/numeric.hpp"
#include "expcircle/subsets.hpp"

namespace expcircle {

inline constexpr unsigned long long kDefaultOracleBudget = 10'000'000ULL;

// Sign of a permutation carrying the written order to ascending cyclic order.
// Well defined only for an odd number of pairwise distinct points (cyclic
// rotations of odd length are even permutations); throws std::invalid_argument
// otherwise.
int cyclic_sign(const std::vector<CirclePoint>& ps);

// d^floor((k+1)/2); in particular 0 when d = 0 and defined for negative d.
Int degree_formula(long k, long d);

// Signed count of the d^k preimage tuples of a generic point under the k-fold
// power map, enumerated lexicographically. Requires k odd and d >= 1; throws
// BudgetExceededError when d^k exceeds the budget.
Int degree_oracle(long k, long d,
                  unsigned long long budget = kDefaultOracleBudget);

// Signed preimage count for the inversion map (d = -1): the cyclic sign of
// the reversed preimage list times the product (-1)^k of local degrees.
Int degree_oracle_inverse(long k);

}  // namespace expcircle
