#include "fairmatch/solver_fes.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairmatch/structure.hpp"

namespace fairmatch {

FPrimeContext FPrimeContext::from_edges(const Instance& inst,
                                        const std::vector<Edge>& f_prime) {
    FPrimeContext ctx;
    ctx.f_prime = f_prime;
    ctx.in_u_prime.assign(inst.u.size(), 0);
    ctx.m.assign(inst.v.size(), std::vector<int>(inst.num_colors, 0));
    for (const Edge& e : f_prime) {
        if (ctx.in_u_prime[e.u])
            throw std::invalid_argument("F' is not a many-to-one matching");
        ctx.in_u_prime[e.u] = 1;
        ctx.m[e.v][inst.u[e.u].color] += 1;
    }
    return ctx;
}

namespace {

struct DpTables {
    std::vector<char> f, g;
    std::vector<int> f_choice;  // for u with f=1: the child matched to u
    std::vector<int> parent;
    std::vector<int> order;     // component vertices, parents before children
};

// Per-color child statistics at a v vertex.
struct VStats {
    std::vector<int> n1;  // children that must be matched to v (f=0, g=1)
    std::vector<int> n2;  // children that may be matched to v (f=1, g=1)
    bool dead = false;    // some child has f=g=0
};

VStats v_stats(const Instance& inst, const DpTables& t,
               const std::vector<std::vector<int>>& adj, int vc,
               const FPrimeContext& ctx) {
    VStats s;
    s.n1.assign(inst.num_colors, 0);
    s.n2.assign(inst.num_colors, 0);
    for (int w : adj[vc]) {
        if (w == t.parent[vc]) continue;
        if (ctx.in_u_prime[w]) continue;
        const int c = inst.u[w].color;
        if (!t.f[w] && !t.g[w]) {
            s.dead = true;
            return s;
        }
        if (!t.f[w] && t.g[w]) s.n1[c] += 1;
        if (t.f[w] && t.g[w]) s.n2[c] += 1;
    }
    return s;
}

// max_c(n1 + m) - min_c(n1 + n2 + m) <= L; extra_color adds a forced unit
// (the parent's color) when computing g.
bool v_feasible(const Instance& inst, const VStats& s, int v, const FPrimeContext& ctx,
                int extra_color) {
    int a = 0, b = 1 << 30;
    for (int c = 0; c < inst.num_colors; ++c) {
        const int forced = s.n1[c] + ctx.m[v][c] + (c == extra_color ? 1 : 0);
        a = std::max(a, forced);
        b = std::min(b, forced + s.n2[c]);
    }
    return a - b <= inst.v[v].threshold;
}

}  // namespace

TreeDpResult tree_dp(const Instance& inst, const std::vector<std::vector<int>>& forest_adj,
                     int root_combined, const FPrimeContext& ctx, bool want_witness) {
    const int nu = inst.n_u();
    const int n = inst.n_vertices();

    DpTables t;
    t.f.assign(n, 0);
    t.g.assign(n, 0);
    t.f_choice.assign(n, -1);
    t.parent.assign(n, -1);

    // DFS from the root; parents precede children in the order.
    {
        std::vector<int> stack{root_combined};
        std::vector<char> seen(n, 0);
        seen[root_combined] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            t.order.push_back(x);
            for (int w : forest_adj[x]) {
                if (seen[w]) continue;
                if (w < nu && ctx.in_u_prime[w]) continue;
                seen[w] = 1;
                t.parent[w] = x;
                stack.push_back(w);
            }
        }
    }

    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        const int x = *it;
        if (x < nu) {
            // u vertex: f needs one g-child and f on the rest; g needs f on all.
            int f0_count = 0, f0_child = -1, g1_child = -1;
            for (int w : forest_adj[x]) {
                if (w == t.parent[x]) continue;
                if (!t.f[w]) {
                    f0_count++;
                    f0_child = w;
                }
                if (t.g[w] && g1_child < 0) g1_child = w;
            }
            t.g[x] = (f0_count == 0);
            if (f0_count == 0 && g1_child >= 0) {
                t.f[x] = 1;
                t.f_choice[x] = g1_child;
            } else if (f0_count == 1 && t.g[f0_child]) {
                t.f[x] = 1;
                t.f_choice[x] = f0_child;
            }
        } else {
            const int v = x - nu;
            const VStats s = v_stats(inst, t, forest_adj, x, ctx);
            if (s.dead) continue;  // f = g = 0
            t.f[x] = v_feasible(inst, s, v, ctx, -1);
            if (t.parent[x] >= 0)
                t.g[x] = v_feasible(inst, s, v, ctx, inst.u[t.parent[x]].color);
        }
    }

    TreeDpResult out;
    out.feasible = t.f[root_combined];
    if (!out.feasible || !want_witness) return out;

    // Top-down reconstruction.  Mode G means the vertex is matched to its
    // parent; the edge is recorded by the parent's expansion.
    enum class Mode { F, G };
    std::vector<std::pair<int, Mode>> stack{{root_combined, Mode::F}};
    while (!stack.empty()) {
        auto [x, mode] = stack.back();
        stack.pop_back();
        if (x < nu) {
            const int pick = (mode == Mode::F) ? t.f_choice[x] : -1;
            if (pick >= 0) out.fragment.push_back({x, pick - nu});
            for (int w : forest_adj[x]) {
                if (w == t.parent[x]) continue;
                stack.push_back({w, w == pick ? Mode::G : Mode::F});
            }
        } else {
            const int v = x - nu;
            const int extra = (mode == Mode::G) ? inst.u[t.parent[x]].color : -1;
            const VStats s = v_stats(inst, t, forest_adj, x, ctx);
            // Per-color target load l_c = max(min(A, B), forced_c); match the
            // forced children plus the lowest-index optional ones.
            int a = 0, b = 1 << 30;
            std::vector<int> forced(inst.num_colors);
            for (int c = 0; c < inst.num_colors; ++c) {
                forced[c] = s.n1[c] + ctx.m[v][c] + (c == extra ? 1 : 0);
                a = std::max(a, forced[c]);
                b = std::min(b, forced[c] + s.n2[c]);
            }
            std::vector<int> need(inst.num_colors);
            for (int c = 0; c < inst.num_colors; ++c)
                need[c] = std::max(std::min(a, b), forced[c]) - forced[c];

            std::vector<int> children;
            for (int w : forest_adj[x])
                if (w != t.parent[x] && !ctx.in_u_prime[w]) children.push_back(w);
            std::sort(children.begin(), children.end());
            for (int w : children) {
                const int c = inst.u[w].color;
                bool match = false;
                if (!t.f[w] && t.g[w]) {
                    match = true;
                } else if (t.f[w] && t.g[w] && need[c] > 0) {
                    match = true;
                    need[c] -= 1;
                }
                if (match) out.fragment.push_back({w, v});
                stack.push_back({w, match ? Mode::G : Mode::F});
            }
        }
    }
    return out;
}

SolveResult solve_fes(const Instance& inst) {
    const int nu = inst.n_u();
    const int n = inst.n_vertices();
    const std::vector<Edge> fes = feedback_edge_set(inst);

    // Combined adjacency with every feedback edge removed.
    std::vector<std::vector<int>> forest_adj(n);
    {
        std::vector<char> is_f(inst.edges.size(), 0);
        size_t fi = 0;
        for (size_t k = 0; k < inst.edges.size(); ++k) {
            if (fi < fes.size() && inst.edges[k] == fes[fi]) {
                is_f[k] = 1;
                fi++;
            }
        }
        for (size_t k = 0; k < inst.edges.size(); ++k) {
            if (is_f[k]) continue;
            const Edge& e = inst.edges[k];
            forest_adj[e.u].push_back(nu + e.v);
            forest_adj[nu + e.v].push_back(e.u);
        }
    }

    std::vector<char> seen(n, 0);
    std::vector<int> roots;

    auto evaluate = [&](const std::vector<Edge>& f_prime, Matching& witness_out) -> bool {
        const FPrimeContext ctx = FPrimeContext::from_edges(inst, f_prime);
        std::fill(seen.begin(), seen.end(), 0);
        roots.clear();
        // Component roots: the lowest u when the component has one, the
        // (necessarily single) v otherwise.
        for (int start = 0; start < n; ++start) {
            if (seen[start]) continue;
            if (start < nu && ctx.in_u_prime[start]) continue;
            std::vector<int> stack{start};
            seen[start] = 1;
            int root = start;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                if (x < nu && (root >= nu || x < root)) root = x;
                for (int w : forest_adj[x]) {
                    if (seen[w]) continue;
                    if (w < nu && ctx.in_u_prime[w]) continue;
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
            roots.push_back(root);
        }
        std::vector<Edge> fragments;
        for (int root : roots) {
            TreeDpResult r = tree_dp(inst, forest_adj, root, ctx, true);
            if (!r.feasible) return false;
            fragments.insert(fragments.end(), r.fragment.begin(), r.fragment.end());
        }
        witness_out.pairs = f_prime;
        witness_out.pairs.insert(witness_out.pairs.end(), fragments.begin(), fragments.end());
        return true;
    };

    // Depth-first subset enumeration over F, skipping u-endpoint conflicts;
    // the all-excluded branch comes first, so acyclic inputs use F' = {}.
    std::vector<Edge> chosen;
    std::vector<char> u_used(inst.u.size(), 0);
    Matching witness;
    bool found = false;

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (found) return;
        if (idx == fes.size()) {
            Matching w;
            if (evaluate(chosen, w)) {
                witness = std::move(w);
                found = true;
            }
            return;
        }
        self(self, idx + 1);
        const Edge& e = fes[idx];
        if (!found && !u_used[e.u]) {
            u_used[e.u] = 1;
            chosen.push_back(e);
            self(self, idx + 1);
            chosen.pop_back();
            u_used[e.u] = 0;
        }
    };
    rec(rec, 0);

    SolveResult res;
    if (found) {
        res.answer = Answer::Yes;
        res.witness = std::move(witness);
    }
    return res;
}

}  // namespace fairmatch
