#pragma once

#include <optional>

#include "fairmatch/result.hpp"

// Solver for instances with few V vertices.  Feasibility is decided on an
// integer program over per-vertex minimum and maximum color loads (x_v, y_v):
//
//   sum_{v in W} y_v >= max_c |nu_c(W)|        for every W subseteq V
//   sum_{v in W} x_v <= min_c |N_c(W)|         for every W subseteq V
//   0 <= y_v - x_v <= L(v)
//
// where N_c(W) counts color-c vertices with a neighbor in W and nu_c(W)
// counts color-c vertices whose whole neighborhood lies inside W.  A feasible
// (x, y) is turned into a matching by one circulation with lower bounds per
// color.

namespace fairmatch {

// Hard cap on |V|; the constraint tables are exponential in it.  The CLI
// enforces a tighter practical budget.
inline constexpr int smallk_max_v = 20;

struct IntervalAssignment {
    std::vector<int> x;  // per-v minimum color load
    std::vector<int> y;  // per-v maximum color load
};

std::optional<IntervalAssignment> ilp1_feasible(const Instance& inst);

// Exhaustively rechecks every W-constraint for a candidate assignment;
// returns the first violated constraint's description.
std::optional<std::string> ilp1_check_all(const Instance& inst,
                                          const IntervalAssignment& iv);

// Requires a feasible assignment; a failed circulation indicates a bug and
// throws std::logic_error.
Matching reconstruct_from_intervals(const Instance& inst, const IntervalAssignment& iv);

SolveResult solve_smallk(const Instance& inst);

}  // namespace fairmatch
