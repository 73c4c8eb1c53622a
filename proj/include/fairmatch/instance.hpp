#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

// Core data model for fair many-to-one matching on colored bipartite graphs.
//
// An instance is a bipartite graph (U, V, E) where every u carries a color
// from a dense color set [0, num_colors) and every v carries a non-negative
// integer threshold.  A many-to-one matching matches each u to at most one
// neighbor; it is left-perfect when every u is matched exactly once, and
// fair when, at every v, the per-color counts of matched u's differ by at
// most the threshold of v.  Counts range over *all* colors, including colors
// with no vertices in the instance; an unused color pins the minimum count
// at zero.

namespace fairmatch {

struct UVertex {
    std::string id;
    int color = 0;
};

struct VVertex {
    std::string id;
    int threshold = 0;
};

// Endpoints are dense indices into Instance::u and Instance::v.
struct Edge {
    int u = -1;
    int v = -1;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Instance {
    int num_colors = 0;
    std::vector<UVertex> u;
    std::vector<VVertex> v;
    std::vector<Edge> edges;

    int n_u() const { return static_cast<int>(u.size()); }
    int n_v() const { return static_cast<int>(v.size()); }
    int n_vertices() const { return n_u() + n_v(); }
    int n_edges() const { return static_cast<int>(edges.size()); }
};

struct Matching {
    std::vector<Edge> pairs;
};

// Neighbor lists; u_adj[i] holds v-indices, v_adj[j] holds u-indices,
// both sorted ascending.
struct Adjacency {
    std::vector<std::vector<int>> u_adj;
    std::vector<std::vector<int>> v_adj;
};

Adjacency make_adjacency(const Instance& inst);

// Returns one human-readable string per violated invariant; empty means the
// instance is well-formed.  Violations are data, not errors: callers decide
// whether to proceed.
std::vector<std::string> validate_instance(const Instance& inst);

// Per-color counts of matched u's at v (length num_colors).  Pairs whose
// endpoints are out of range are ignored here; verify_matching reports them.
// Throws std::out_of_range for an unknown v.
std::vector<int> color_histogram(const Instance& inst, const Matching& m, int v);

struct FairnessPerV {
    int v = -1;
    int max_count = 0;
    int min_count = 0;
    bool fair = false;
};

struct FairnessReport {
    bool left_perfect = false;
    std::vector<FairnessPerV> per_v;
    bool overall = false;
    // Structural problems with the matching itself (non-edges, duplicate u's,
    // out-of-range indices).  Any entry forces overall = false.
    std::vector<std::string> problems;
};

FairnessReport verify_matching(const Instance& inst, const Matching& m);

// JSON (de)serialization.  Instance schema:
//   {"num_colors": int,
//    "u": [{"id": str, "color": int}],
//    "v": [{"id": str, "l": int}],
//    "edges": [[u_id, v_id]]}
// Matching schema: {"pairs": [[u_id, v_id]]}.
// Loading throws std::runtime_error on malformed documents or unknown ids.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json matching_to_json(const Instance& inst, const Matching& m);
Matching matching_from_json(const nlohmann::json& j, const Instance& inst);
nlohmann::json fairness_report_to_json(const Instance& inst, const FairnessReport& r);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);
Matching load_matching(const std::string& path, const Instance& inst);
void save_matching(const Instance& inst, const Matching& m, const std::string& path);

}  // namespace fairmatch
