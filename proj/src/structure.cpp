#include "fairmatch/structure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace fairmatch {

SimpleGraph combined_graph(const Instance& inst) {
    SimpleGraph g(inst.n_vertices());
    for (const Edge& e : inst.edges) g.add_edge(e.u, inst.n_u() + e.v);
    return g;
}

// ---------------------------------------------------------------------------
// Feedback edge set
// ---------------------------------------------------------------------------

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<Edge> feedback_edge_set(const Instance& inst) {
    Dsu dsu(inst.n_vertices());
    std::vector<Edge> fes;
    for (const Edge& e : inst.edges)
        if (!dsu.unite(e.u, inst.n_u() + e.v)) fes.push_back(e);
    return fes;
}

std::pair<int, int> degree_stats(const Instance& inst) {
    std::vector<int> du(inst.u.size(), 0), dv(inst.v.size(), 0);
    for (const Edge& e : inst.edges) {
        du[e.u]++;
        dv[e.v]++;
    }
    const int mu = du.empty() ? 0 : *std::max_element(du.begin(), du.end());
    const int mv = dv.empty() ? 0 : *std::max_element(dv.begin(), dv.end());
    return {mu, mv};
}

// ---------------------------------------------------------------------------
// Twin partition
// ---------------------------------------------------------------------------

TwinPartition twin_partition(const Instance& inst) {
    const Adjacency adj = make_adjacency(inst);
    auto classify = [](const std::vector<std::vector<int>>& nbhd, const char* side) {
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int i = 0; i < static_cast<int>(nbhd.size()); ++i) {
            if (nbhd[i].empty())
                throw std::invalid_argument(std::string("twin_partition: isolated ") + side +
                                            " vertex " + std::to_string(i) +
                                            "; preprocess first");
            groups[nbhd[i]].push_back(i);
        }
        std::vector<std::vector<int>> classes;
        classes.reserve(groups.size());
        for (auto& [key, members] : groups) classes.push_back(std::move(members));
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return classes;
    };
    TwinPartition tp;
    tp.u_classes = classify(adj.u_adj, "u");
    tp.v_classes = classify(adj.v_adj, "v");
    return tp;
}

// ---------------------------------------------------------------------------
// Tree decomposition: elimination orders
// ---------------------------------------------------------------------------

namespace {

// Builds a decomposition from an elimination order by simulating elimination
// with fill-in; bag i = {order[i]} + its neighbors at elimination time, and
// each bag hangs below the bag of the earliest-eliminated such neighbor.
TreeDecomposition decomposition_from_order(const SimpleGraph& g,
                                           const std::vector<int>& order) {
    const int n = g.n;
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        td.width = -1;
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = std::set<int>(g.adj[v].begin(), g.adj[v].end());

    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;

    td.bags.resize(n);
    td.width = -1;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        td.bags[i] = nb;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        td.width = std::max(td.width, static_cast<int>(td.bags[i].size()) - 1);
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        for (int w : nb) adj[w].erase(v);
        adj[v].clear();

        if (i + 1 == n) continue;
        int parent = n - 1;  // fallback for a vertex isolated at elimination time
        if (!nb.empty()) {
            parent = position[*std::min_element(nb.begin(), nb.end(), [&](int a, int b) {
                return position[a] < position[b];
            })];
        }
        td.tree_edges.push_back({i, parent});
    }
    return td;
}

// Greedy elimination with a lazy priority queue.  score() must be computable
// from the current adjacency; stale queue entries are revalidated on pop and
// entries for vertices near an elimination are refreshed eagerly.
template <typename ScoreFn>
std::vector<int> greedy_elimination_order(const SimpleGraph& g, ScoreFn score) {
    const int n = g.n;
    std::vector<std::set<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = std::set<int>(g.adj[v].begin(), g.adj[v].end());

    using Entry = std::pair<long long, int>;  // (score, vertex), min first
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    std::vector<char> eliminated(n, 0);
    for (int v = 0; v < n; ++v) pq.push({score(adj, v), v});

    std::vector<int> order;
    order.reserve(n);
    while (static_cast<int>(order.size()) < n) {
        auto [s, v] = pq.top();
        pq.pop();
        if (eliminated[v]) continue;
        const long long cur = score(adj, v);
        if (cur != s) {
            pq.push({cur, v});
            continue;
        }
        order.push_back(v);
        eliminated[v] = 1;
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        std::set<int> touched;
        for (int w : nb) {
            adj[w].erase(v);
            touched.insert(w);
            for (int x : adj[w])
                if (!eliminated[x]) touched.insert(x);
        }
        adj[v].clear();
        for (int w : touched)
            if (!eliminated[w]) pq.push({score(adj, w), w});
    }
    return order;
}

long long fill_score(const std::vector<std::set<int>>& adj, int v) {
    long long fill = 0;
    const auto& nb = adj[v];
    for (auto it = nb.begin(); it != nb.end(); ++it)
        for (auto jt = std::next(it); jt != nb.end(); ++jt)
            if (!adj[*it].count(*jt)) fill++;
    return fill;
}

long long degree_score(const std::vector<std::set<int>>& adj, int v) {
    return static_cast<long long>(adj[v].size());
}

// Vertices reachable from v through already-eliminated set T (bitmask),
// excluding T and v; this is v's neighborhood in the fill graph after
// eliminating T.
uint32_t reach_through(const std::vector<uint32_t>& adjmask, uint32_t t, int v) {
    uint32_t seen = adjmask[v];
    uint32_t frontier = seen & t;
    while (frontier) {
        uint32_t next = 0;
        uint32_t f = frontier;
        while (f) {
            const int w = std::countr_zero(f);
            f &= f - 1;
            next |= adjmask[w];
        }
        next &= ~seen;
        seen |= next;
        frontier = next & t;
    }
    return seen & ~t & ~(1u << v);
}

}  // namespace

TreeDecomposition tree_decomposition_exact(const SimpleGraph& g) {
    const int n = g.n;
    if (n > tree_decomposition_exact_limit)
        throw std::invalid_argument("tree_decomposition_exact: graph too large");
    if (n == 0) return decomposition_from_order(g, {});

    std::vector<uint32_t> adjmask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.adj[v]) adjmask[v] |= 1u << w;

    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    // width[S] = best achievable max elimination degree over orders that
    // eliminate exactly the set S first.
    std::vector<int8_t> width(full + 1, 0);
    std::vector<int8_t> choice(full + 1, -1);
    for (uint32_t s = 1; s <= full; ++s) {
        int best = n + 1;
        int best_v = -1;
        uint32_t bits = s;
        while (bits) {
            const int v = std::countr_zero(bits);
            bits &= bits - 1;
            const uint32_t rest = s & ~(1u << v);
            const int deg = std::popcount(reach_through(adjmask, rest, v));
            const int cand = std::max<int>(width[rest], deg);
            if (cand < best) {
                best = cand;
                best_v = v;
            }
        }
        width[s] = static_cast<int8_t>(best);
        choice[s] = static_cast<int8_t>(best_v);
    }

    std::vector<int> order(n);
    uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = choice[s];
        s &= ~(1u << order[i]);
    }
    return decomposition_from_order(g, order);
}

TreeDecomposition tree_decomposition_heuristic(const Instance& inst, TdHeuristic h) {
    const SimpleGraph g = combined_graph(inst);
    std::vector<int> order = (h == TdHeuristic::MinFill)
                                 ? greedy_elimination_order(g, fill_score)
                                 : greedy_elimination_order(g, degree_score);
    return decomposition_from_order(g, order);
}

TreeDecomposition tree_decomposition(const Instance& inst) {
    if (inst.n_vertices() <= tree_decomposition_exact_limit)
        return tree_decomposition_exact(combined_graph(inst));
    return tree_decomposition_heuristic(inst, TdHeuristic::MinFill);
}

// ---------------------------------------------------------------------------
// Decomposition validation
// ---------------------------------------------------------------------------

std::optional<std::string> validate_decomposition(const TreeDecomposition& td,
                                                  const Instance& inst) {
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return "decomposition has no bags";
    if (static_cast<int>(td.tree_edges.size()) != nb - 1)
        return "bag tree must have exactly #bags - 1 edges";

    std::vector<std::vector<int>> bag_adj(nb);
    {
        Dsu dsu(nb);
        for (auto [a, b] : td.tree_edges) {
            if (a < 0 || a >= nb || b < 0 || b >= nb) return "tree edge references unknown bag";
            if (!dsu.unite(a, b)) return "bag tree contains a cycle";
            bag_adj[a].push_back(b);
            bag_adj[b].push_back(a);
        }
    }

    const int n = inst.n_vertices();
    std::vector<std::vector<int>> containing(n);
    int maxbag = 0;
    for (int i = 0; i < nb; ++i) {
        maxbag = std::max(maxbag, static_cast<int>(td.bags[i].size()));
        for (int x : td.bags[i]) {
            if (x < 0 || x >= n) return "bag contains unknown vertex " + std::to_string(x);
            containing[x].push_back(i);
        }
    }
    if (td.width != maxbag - 1) return "width field disagrees with max bag size";

    for (int x = 0; x < n; ++x)
        if (containing[x].empty())
            return "vertex " + std::to_string(x) + " appears in no bag";

    for (const Edge& e : inst.edges) {
        const int a = e.u, b = inst.n_u() + e.v;
        bool covered = false;
        for (int i : containing[a]) {
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), b)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") is in no bag";
    }

    // Connectivity of each vertex's bag set.
    std::vector<char> in_set(nb, 0), seen(nb, 0);
    for (int x = 0; x < n; ++x) {
        for (int i : containing[x]) in_set[i] = 1;
        std::vector<int> stack{containing[x].front()};
        seen[containing[x].front()] = 1;
        int reached = 0;
        while (!stack.empty()) {
            const int b = stack.back();
            stack.pop_back();
            reached++;
            for (int c : bag_adj[b])
                if (in_set[c] && !seen[c]) {
                    seen[c] = 1;
                    stack.push_back(c);
                }
        }
        for (int i : containing[x]) {
            in_set[i] = 0;
            seen[i] = 0;
        }
        if (reached != static_cast<int>(containing[x].size()))
            return "bags containing vertex " + std::to_string(x) + " are not connected";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Nice tree decomposition
// ---------------------------------------------------------------------------

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceNodeKind kind, int vertex, std::vector<int> bag, int left, int right) {
        NiceNode nd;
        nd.kind = kind;
        nd.vertex = vertex;
        nd.bag = std::move(bag);
        nd.left = left;
        nd.right = right;
        nodes.push_back(std::move(nd));
        return static_cast<int>(nodes.size()) - 1;
    }

    // Chain of forgets/introduces transforming the subtree rooted at `below`
    // (with bag `from`) into a node with bag `to`.
    int morph(int below, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> drop, gain;
        std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                            std::back_inserter(drop));
        std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                            std::back_inserter(gain));
        std::vector<int> bag = from;
        int cur = below;
        for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
            bag.erase(std::find(bag.begin(), bag.end(), *it));
            cur = add(NiceNodeKind::Forget, *it, bag, cur, -1);
        }
        for (int x : gain) {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), x), x);
            cur = add(NiceNodeKind::Introduce, x, bag, cur, -1);
        }
        return cur;
    }

    int chain_from_empty(const std::vector<int>& to) {
        int cur = add(NiceNodeKind::Leaf, -1, {}, -1, -1);
        return morph(cur, {}, to);
    }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Instance& inst,
                                int root_bag) {
    (void)inst;
    const int nb = static_cast<int>(td.bags.size());
    NiceTreeDecomposition out;
    NiceBuilder b;
    if (nb == 0) {
        out.root = b.add(NiceNodeKind::Leaf, -1, {}, -1, -1);
        out.nodes = std::move(b.nodes);
        out.width = -1;
        return out;
    }
    if (root_bag < 0 || root_bag >= nb)
        throw std::invalid_argument("make_nice: root bag out of range");

    std::vector<std::vector<int>> bag_adj(nb);
    for (auto [x, y] : td.tree_edges) {
        bag_adj[x].push_back(y);
        bag_adj[y].push_back(x);
    }

    // Iterative post-order over the rooted bag tree.
    std::vector<int> parent(nb, -2), post;
    {
        std::vector<int> stack{root_bag};
        parent[root_bag] = -1;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            post.push_back(t);
            for (int c : bag_adj[t])
                if (parent[c] == -2) {
                    parent[c] = t;
                    stack.push_back(c);
                }
        }
        std::reverse(post.begin(), post.end());
    }
    if (static_cast<int>(post.size()) != nb)
        throw std::invalid_argument("make_nice: bag tree is disconnected");

    std::vector<int> built(nb, -1);
    for (int t : post) {
        std::vector<int> child_roots;
        for (int c : bag_adj[t])
            if (c != parent[t]) child_roots.push_back(b.morph(built[c], td.bags[c], td.bags[t]));
        if (child_roots.empty()) {
            built[t] = b.chain_from_empty(td.bags[t]);
        } else {
            int acc = child_roots[0];
            for (size_t i = 1; i < child_roots.size(); ++i)
                acc = b.add(NiceNodeKind::Join, -1, td.bags[t], acc, child_roots[i]);
            built[t] = acc;
        }
    }

    out.root = b.morph(built[root_bag], td.bags[root_bag], {});
    out.nodes = std::move(b.nodes);
    out.width = -1;
    for (const NiceNode& nd : out.nodes)
        out.width = std::max(out.width, static_cast<int>(nd.bag.size()) - 1);
    return out;
}

std::optional<std::string> validate_nice(const NiceTreeDecomposition& ntd,
                                         const Instance& inst) {
    const int nn = static_cast<int>(ntd.nodes.size());
    if (nn == 0) return "nice decomposition has no nodes";
    if (ntd.root < 0 || ntd.root >= nn) return "root index out of range";
    if (!ntd.nodes[ntd.root].bag.empty()) return "root bag is not empty";

    std::vector<int> indeg(nn, 0);
    for (int i = 0; i < nn; ++i) {
        const NiceNode& nd = ntd.nodes[i];
        auto child_bag = [&](int c) -> const std::vector<int>& { return ntd.nodes[c].bag; };
        switch (nd.kind) {
            case NiceNodeKind::Leaf:
                if (nd.left != -1 || nd.right != -1) return "leaf node with children";
                if (!nd.bag.empty()) return "leaf bag is not empty";
                break;
            case NiceNodeKind::Introduce: {
                if (nd.left < 0 || nd.right != -1) return "introduce node must have one child";
                std::vector<int> expect = child_bag(nd.left);
                if (std::binary_search(expect.begin(), expect.end(), nd.vertex))
                    return "introduced vertex already in child bag";
                expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex),
                              nd.vertex);
                if (expect != nd.bag) return "introduce bag arithmetic violated";
                break;
            }
            case NiceNodeKind::Forget: {
                if (nd.left < 0 || nd.right != -1) return "forget node must have one child";
                std::vector<int> expect = child_bag(nd.left);
                auto it = std::find(expect.begin(), expect.end(), nd.vertex);
                if (it == expect.end()) return "forgotten vertex missing from child bag";
                expect.erase(it);
                if (expect != nd.bag) return "forget bag arithmetic violated";
                break;
            }
            case NiceNodeKind::Join:
                if (nd.left < 0 || nd.right < 0) return "join node must have two children";
                if (child_bag(nd.left) != nd.bag || child_bag(nd.right) != nd.bag)
                    return "join bags differ";
                break;
        }
        if (nd.left >= 0) indeg[nd.left]++;
        if (nd.right >= 0) indeg[nd.right]++;
    }
    for (int i = 0; i < nn; ++i) {
        if (i == ntd.root && indeg[i] != 0) return "root has a parent";
        if (i != ntd.root && indeg[i] != 1) return "node is not part of a single rooted tree";
    }

    // The underlying bags must still form a valid decomposition.
    TreeDecomposition td;
    td.bags.reserve(nn);
    for (const NiceNode& nd : ntd.nodes) td.bags.push_back(nd.bag);
    for (int i = 0; i < nn; ++i) {
        if (ntd.nodes[i].left >= 0) td.tree_edges.push_back({i, ntd.nodes[i].left});
        if (ntd.nodes[i].right >= 0) td.tree_edges.push_back({i, ntd.nodes[i].right});
    }
    td.width = -1;
    for (const auto& bag : td.bags)
        td.width = std::max(td.width, static_cast<int>(bag.size()) - 1);
    if (auto err = validate_decomposition(td, inst)) return err;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tree-depth
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> components_of(const SimpleGraph& g,
                                            const std::vector<int>& vertices) {
    std::vector<char> in_set(g.n, 0), seen(g.n, 0);
    for (int v : vertices) in_set[v] = 1;
    std::vector<std::vector<int>> comps;
    for (int v : vertices) {
        if (seen[v]) continue;
        comps.emplace_back();
        std::vector<int> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            comps.back().push_back(x);
            for (int w : g.adj[x])
                if (in_set[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

// Farthest vertex from src within the component (BFS); returns (vertex, dist,
// parents) for midpoint extraction.
std::tuple<int, int, std::vector<int>> bfs_far(const SimpleGraph& g,
                                               const std::vector<char>& in_set, int src) {
    std::vector<int> dist(g.n, -1), par(g.n, -1);
    std::queue<int> q;
    q.push(src);
    dist[src] = 0;
    int far = src;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        if (dist[x] > dist[far] || (dist[x] == dist[far] && x < far)) far = x;
        for (int w : g.adj[x])
            if (in_set[w] && dist[w] < 0) {
                dist[w] = dist[x] + 1;
                par[w] = x;
                q.push(w);
            }
    }
    return {far, dist[far], par};
}

}  // namespace

int treedepth_upper(const SimpleGraph& g) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    int result = 0;
    std::vector<std::pair<std::vector<int>, int>> stack;
    stack.push_back({std::move(all), 0});
    std::vector<char> in_set(g.n, 0);
    while (!stack.empty()) {
        auto [vs, off] = std::move(stack.back());
        stack.pop_back();
        if (vs.empty()) continue;
        for (auto& comp : components_of(g, vs)) {
            if (comp.size() == 1) {
                result = std::max(result, off + 1);
                continue;
            }
            for (int v : comp) in_set[v] = 1;
            // Remove the midpoint of a longest shortest path; halves paths and
            // cycles, good enough as an upper bound.
            auto [a, da, par_a] = bfs_far(g, in_set, comp.front());
            auto [bv, db, par] = bfs_far(g, in_set, a);
            int mid = bv;
            for (int step = 0; step < db / 2; ++step) mid = par[mid];
            for (int v : comp) in_set[v] = 0;
            std::vector<int> rest;
            rest.reserve(comp.size() - 1);
            for (int v : comp)
                if (v != mid) rest.push_back(v);
            result = std::max(result, off + 1);
            stack.push_back({std::move(rest), off + 1});
        }
    }
    return result;
}

int treedepth_upper(const Instance& inst) { return treedepth_upper(combined_graph(inst)); }

namespace {

struct TreedepthSolver {
    std::vector<uint32_t> adjmask;
    std::unordered_map<uint32_t, int> memo;

    int solve(uint32_t mask) {
        if (mask == 0) return 0;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;

        // Split into connected components first.
        int result;
        uint32_t comp = component_mask(mask, std::countr_zero(mask));
        if (comp != mask) {
            result = std::max(solve_connected(comp), solve(mask & ~comp));
        } else {
            result = solve_connected(mask);
        }
        memo[mask] = result;
        return result;
    }

    uint32_t component_mask(uint32_t mask, int start) {
        uint32_t seen = 1u << start;
        uint32_t frontier = seen;
        while (frontier) {
            uint32_t next = 0;
            uint32_t f = frontier;
            while (f) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= adjmask[v] & mask;
            }
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    int solve_connected(uint32_t mask) {
        const int k = std::popcount(mask);
        if (k == 1) return 1;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        // A connected graph with an edge has tree-depth at least 2.
        int best = k;
        uint32_t bits = mask;
        while (bits) {
            const int v = std::countr_zero(bits);
            bits &= bits - 1;
            best = std::min(best, 1 + solve(mask & ~(1u << v)));
            if (best == 2) break;
        }
        memo[mask] = best;
        return best;
    }
};

}  // namespace

int treedepth_exact_small(const SimpleGraph& g) {
    if (g.n > treedepth_exact_limit)
        throw std::invalid_argument("treedepth_exact_small: graph exceeds " +
                                    std::to_string(treedepth_exact_limit) + " vertices");
    if (g.n == 0) return 0;
    TreedepthSolver solver;
    solver.adjmask.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) solver.adjmask[v] |= 1u << w;
    const uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    return solver.solve(full);
}

int treedepth_exact_small(const Instance& inst) {
    return treedepth_exact_small(combined_graph(inst));
}

// ---------------------------------------------------------------------------
// PACE .td text format
// ---------------------------------------------------------------------------

void write_td(const TreeDecomposition& td, int n_vertices, std::ostream& out) {
    int maxbag = 0;
    for (const auto& bag : td.bags) maxbag = std::max(maxbag, static_cast<int>(bag.size()));
    out << "s td " << td.bags.size() << ' ' << maxbag << ' ' << n_vertices << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << (i + 1);
        for (int x : td.bags[i]) out << ' ' << (x + 1);
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << (a + 1) << ' ' << (b + 1) << '\n';
}

TreeDecomposition read_td(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    int declared_bags = -1;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, kind;
            int maxbag = 0, n = 0;
            if (!(ls >> s >> kind >> declared_bags >> maxbag >> n) || kind != "td")
                throw std::runtime_error("td file: malformed s-line");
            td.bags.assign(declared_bags, {});
            have_header = true;
        } else if (line[0] == 'b') {
            if (!have_header) throw std::runtime_error("td file: b-line before s-line");
            char b;
            int id;
            ls >> b >> id;
            if (id < 1 || id > declared_bags)
                throw std::runtime_error("td file: bag id out of range");
            int x;
            while (ls >> x) td.bags[id - 1].push_back(x - 1);
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
        } else {
            if (!have_header) throw std::runtime_error("td file: edge before s-line");
            int a, b;
            std::istringstream es(line);
            if (!(es >> a >> b)) throw std::runtime_error("td file: malformed edge line");
            if (a < 1 || a > declared_bags || b < 1 || b > declared_bags)
                throw std::runtime_error("td file: edge bag id out of range");
            td.tree_edges.push_back({a - 1, b - 1});
        }
    }
    if (!have_header) throw std::runtime_error("td file: missing s-line");
    td.width = -1;
    for (const auto& bag : td.bags)
        td.width = std::max(td.width, static_cast<int>(bag.size()) - 1);
    return td;
}

}  // namespace fairmatch
