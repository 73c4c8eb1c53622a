#pragma once

#include "fairmatch/result.hpp"

// Exact reference solver: backtracking over u-assignments with propagation.
// Yes answers come with a witness; No answers are exact (complete search).
// The node budget caps search-tree nodes (branch points plus propagated
// commitments); exceeding it yields BudgetExceeded, never a wrong verdict.

namespace fairmatch {

inline constexpr long long default_oracle_budget = 10'000'000;

SolveResult solve_bruteforce(const Instance& inst,
                             long long node_budget = default_oracle_budget);

}  // namespace fairmatch
