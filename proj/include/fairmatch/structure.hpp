#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairmatch/instance.hpp"

// Structural parameters and decompositions consumed by the solvers.
//
// Vertices of an instance are addressed here by a combined index: u vertex i
// maps to i and v vertex j maps to n_u() + j.  The same numbering is used by
// tree decompositions and the PACE .td text format (shifted to 1-based).

namespace fairmatch {

struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit SimpleGraph(int n_ = 0) : n(n_), adj(n_) {}
    void add_edge(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
};

SimpleGraph combined_graph(const Instance& inst);

inline int combined_of_u(const Instance&, int u) { return u; }
inline int combined_of_v(const Instance& inst, int v) { return inst.n_u() + v; }
inline bool combined_is_u(const Instance& inst, int x) { return x < inst.n_u(); }

// Minimum set of edges whose removal leaves the graph acyclic: the non-tree
// edges of a deterministic spanning forest (edges scanned in instance order).
// |F| = m - n + #components.
std::vector<Edge> feedback_edge_set(const Instance& inst);

// (max degree over U, max degree over V); zero on an empty side.
std::pair<int, int> degree_stats(const Instance& inst);

struct TwinPartition {
    // Maximal groups of vertices with identical neighborhoods, per side.
    // Class members are sorted; classes ordered by smallest member.
    std::vector<std::vector<int>> u_classes;
    std::vector<std::vector<int>> v_classes;

    int num_classes() const {
        return static_cast<int>(u_classes.size() + v_classes.size());
    }
};

// Throws std::invalid_argument if the instance has an isolated vertex;
// callers preprocess those away first.
TwinPartition twin_partition(const Instance& inst);

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;          // combined vertex indices, sorted
    std::vector<std::pair<int, int>> tree_edges; // indices into bags
    int width = -1;                              // max bag size - 1
};

enum class TdHeuristic { MinFill, MinDegree };

// Min-fill elimination by default, exact (optimal width) for graphs with at
// most tree_decomposition_exact_limit vertices.
inline constexpr int tree_decomposition_exact_limit = 15;
TreeDecomposition tree_decomposition(const Instance& inst);
TreeDecomposition tree_decomposition_heuristic(const Instance& inst, TdHeuristic h);
TreeDecomposition tree_decomposition_exact(const SimpleGraph& g);

// Checks the three decomposition axioms (vertex cover, edge cover, connected
// subtrees), tree shape, and the width field.  Returns a description of the
// first failure, or nullopt if valid.
std::optional<std::string> validate_decomposition(const TreeDecomposition& td,
                                                  const Instance& inst);

enum class NiceNodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceNodeKind kind = NiceNodeKind::Leaf;
    int vertex = -1;  // introduced/forgotten combined vertex
    std::vector<int> bag;  // sorted combined indices
    int left = -1;
    int right = -1;  // join only
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;
    int width = -1;
};

// Normalizes a decomposition into leaf/introduce/forget/join nodes with an
// empty root bag and empty leaf bags.  root_bag selects which bag of td the
// construction is rooted at.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Instance& inst,
                                int root_bag = 0);

std::optional<std::string> validate_nice(const NiceTreeDecomposition& ntd,
                                         const Instance& inst);

// Tree-depth.  treedepth_exact accepts graphs with at most
// treedepth_exact_limit vertices and throws std::invalid_argument beyond it.
inline constexpr int treedepth_exact_limit = 20;
int treedepth_upper(const SimpleGraph& g);
int treedepth_upper(const Instance& inst);
int treedepth_exact_small(const SimpleGraph& g);
int treedepth_exact_small(const Instance& inst);

// PACE-style .td text format ("s td <bags> <max bag size> <n>", "b" lines,
// then one tree edge per line); vertices and bags are 1-based.
void write_td(const TreeDecomposition& td, int n_vertices, std::ostream& out);
TreeDecomposition read_td(std::istream& in);

}  // namespace fairmatch
