#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fairmatch/result.hpp"
#include "fairmatch/structure.hpp"

// Dynamic program over a nice tree decomposition, parameterized by treewidth
// and the maximum V-side degree.  A state at a node records, for every bag
// u, whether it is unmatched, matched below the bag, or matched to a bag v,
// and for every bag v and color the count of below-bag vertices matched to
// it.  Only reachable states are stored; transitions generate parent states
// from child states, which is equivalent to the top-down formulation.

namespace fairmatch::twdp {

// Per-slot encoding of x: 0 = unmatched, 1 = matched below ("out"),
// 2 + r = matched to the r-th v of the bag.  Layout: one entry per bag u
// (sorted), then per bag v (sorted) one count per color.
using State = std::vector<uint16_t>;

struct StateHash {
    size_t operator()(const State& s) const {
        uint64_t h = 1469598103934665603ull;
        for (uint16_t x : s) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct BackPointer {
    int a = -1;
    int b = -1;
};

struct Context {
    const Instance* inst = nullptr;
    int nu = 0;
    int colors = 0;
    std::vector<std::vector<int>> nbr;  // combined adjacency, sorted
    std::vector<std::vector<int>> n_c;  // per v index, per color: |N_c(v)|
};

Context make_context(const Instance& inst);

struct Table {
    std::vector<int> bag_u, bag_v;  // sorted combined ids
    std::vector<State> states;
    std::vector<BackPointer> bps;
    std::unordered_map<State, int, StateHash> index;

    int u_rank(int w) const;
    int v_rank(int w) const;
    // First insertion wins; duplicates are ignored (deterministic given the
    // generation order).
    void insert(State s, BackPointer bp);
};

Table make_leaf(const Context& ctx);
Table transition_introduce(const Context& ctx, const Table& child, int w);
Table transition_forget(const Context& ctx, const Table& child, int w);
Table transition_join(const Context& ctx, const Table& left, const Table& right);

}  // namespace fairmatch::twdp

namespace fairmatch {

// Throws std::invalid_argument when the decomposition does not fit the
// instance.
SolveResult solve_twdp(const Instance& inst, const NiceTreeDecomposition& ntd);
SolveResult solve_twdp(const Instance& inst);

}  // namespace fairmatch
