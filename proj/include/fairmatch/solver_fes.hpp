#pragma once

#include "fairmatch/result.hpp"

// Solver parameterized by the feedback edge number: enumerate matchable
// subsets F' of a minimum feedback edge set F, strip the F'-matched u's and
// all of F, and decide each remaining forest component with a two-bit
// dynamic program (f = subtree solvable, g = subtree solvable with the root
// matched to its parent).

namespace fairmatch {

struct FPrimeContext {
    std::vector<Edge> f_prime;
    std::vector<char> in_u_prime;        // u matched by an F' edge
    std::vector<std::vector<int>> m;     // m[v][c]: F'-committed count at v

    static FPrimeContext from_edges(const Instance& inst, const std::vector<Edge>& f_prime);
};

struct TreeDpResult {
    bool feasible = false;
    std::vector<Edge> fragment;  // matching edges inside the component
};

// Decides one tree component of the stripped graph.  forest_adj is combined
// adjacency with all feedback edges removed; vertices with
// ctx.in_u_prime set are treated as deleted.  root_combined may be on either
// side; for components without U vertices the fairness test on the committed
// counts falls out of the same recurrence.
TreeDpResult tree_dp(const Instance& inst,
                     const std::vector<std::vector<int>>& forest_adj,
                     int root_combined, const FPrimeContext& ctx,
                     bool want_witness = true);

SolveResult solve_fes(const Instance& inst);

}  // namespace fairmatch
