#include "fairmatch/solver_twdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fairmatch::twdp {

Context make_context(const Instance& inst) {
    Context ctx;
    ctx.inst = &inst;
    ctx.nu = inst.n_u();
    ctx.colors = inst.num_colors;
    ctx.nbr.resize(inst.n_vertices());
    ctx.n_c.assign(inst.v.size(), std::vector<int>(inst.num_colors, 0));
    for (const Edge& e : inst.edges) {
        ctx.nbr[e.u].push_back(ctx.nu + e.v);
        ctx.nbr[ctx.nu + e.v].push_back(e.u);
        ctx.n_c[e.v][inst.u[e.u].color] += 1;
    }
    for (auto& nb : ctx.nbr) std::sort(nb.begin(), nb.end());
    return ctx;
}

int Table::u_rank(int w) const {
    const auto it = std::lower_bound(bag_u.begin(), bag_u.end(), w);
    return (it != bag_u.end() && *it == w) ? static_cast<int>(it - bag_u.begin()) : -1;
}

int Table::v_rank(int w) const {
    const auto it = std::lower_bound(bag_v.begin(), bag_v.end(), w);
    return (it != bag_v.end() && *it == w) ? static_cast<int>(it - bag_v.begin()) : -1;
}

void Table::insert(State s, BackPointer bp) {
    const auto [it, fresh] =
        index.try_emplace(std::move(s), static_cast<int>(states.size()));
    if (!fresh) return;
    states.push_back(it->first);
    bps.push_back(bp);
}

Table make_leaf(const Context&) {
    Table t;
    t.insert(State{}, BackPointer{});
    return t;
}

namespace {

bool adjacent(const Context& ctx, int a, int b) {
    const auto& nb = ctx.nbr[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

}  // namespace

Table transition_introduce(const Context& ctx, const Table& child, int w) {
    Table t;
    t.bag_u = child.bag_u;
    t.bag_v = child.bag_v;
    const int C = ctx.colors;

    if (w < ctx.nu) {
        t.bag_u.insert(std::upper_bound(t.bag_u.begin(), t.bag_u.end(), w), w);
        const int pu = t.u_rank(w);
        // The newcomer stays unmatched or takes a bag neighbor; "matched
        // below" is impossible, it has no neighbor below the bag yet.
        std::vector<int> options{0};
        for (int vi = 0; vi < static_cast<int>(t.bag_v.size()); ++vi)
            if (adjacent(ctx, w, t.bag_v[vi])) options.push_back(2 + vi);
        for (int ci = 0; ci < static_cast<int>(child.states.size()); ++ci) {
            const State& cs = child.states[ci];
            for (int opt : options) {
                State s;
                s.reserve(cs.size() + 1);
                s.insert(s.end(), cs.begin(), cs.begin() + pu);
                s.push_back(static_cast<uint16_t>(opt));
                s.insert(s.end(), cs.begin() + pu, cs.end());
                t.insert(std::move(s), {ci, -1});
            }
        }
    } else {
        t.bag_v.insert(std::upper_bound(t.bag_v.begin(), t.bag_v.end(), w), w);
        const int pv = t.v_rank(w);
        const int nu_bag = static_cast<int>(t.bag_u.size());
        for (int ci = 0; ci < static_cast<int>(child.states.size()); ++ci) {
            const State& cs = child.states[ci];
            // Remap matched ranks past the insertion point and open a zeroed
            // count block for the newcomer.
            State base(nu_bag + t.bag_v.size() * C, 0);
            for (int i = 0; i < nu_bag; ++i) {
                uint16_t x = cs[i];
                if (x >= 2 && x - 2 >= pv) x += 1;
                base[i] = x;
            }
            for (int vi = 0; vi < static_cast<int>(child.bag_v.size()); ++vi) {
                const int to = vi >= pv ? vi + 1 : vi;
                for (int c = 0; c < C; ++c)
                    base[nu_bag + to * C + c] = cs[nu_bag + vi * C + c];
            }
            // Any subset of currently-unmatched bag neighbors may take w.
            std::vector<int> eligible;
            for (int i = 0; i < nu_bag; ++i)
                if (base[i] == 0 && adjacent(ctx, t.bag_u[i], w)) eligible.push_back(i);
            const uint32_t limit = 1u << eligible.size();
            for (uint32_t sub = 0; sub < limit; ++sub) {
                State s = base;
                for (size_t b = 0; b < eligible.size(); ++b)
                    if (sub & (1u << b)) s[eligible[b]] = static_cast<uint16_t>(2 + pv);
                t.insert(std::move(s), {ci, -1});
            }
        }
    }
    return t;
}

Table transition_forget(const Context& ctx, const Table& child, int w) {
    Table t;
    t.bag_u = child.bag_u;
    t.bag_v = child.bag_v;
    const int C = ctx.colors;
    const int nu_bag_child = static_cast<int>(child.bag_u.size());

    if (w < ctx.nu) {
        const int pu = child.u_rank(w);
        t.bag_u.erase(std::find(t.bag_u.begin(), t.bag_u.end(), w));
        const int color = ctx.inst->u[w].color;
        for (int ci = 0; ci < static_cast<int>(child.states.size()); ++ci) {
            const State& cs = child.states[ci];
            const uint16_t xw = cs[pu];
            if (xw == 0) continue;  // u would stay unmatched forever
            State s;
            s.reserve(cs.size() - 1);
            s.insert(s.end(), cs.begin(), cs.begin() + pu);
            s.insert(s.end(), cs.begin() + pu + 1, cs.end());
            if (xw >= 2) {
                // The pair leaves the bag: its unit moves from the derived
                // bag count into the stored below-bag count.
                const int vi = xw - 2;
                const int at = static_cast<int>(t.bag_u.size()) + vi * C + color;
                s[at] += 1;
                if (s[at] > ctx.n_c[child.bag_v[vi] - ctx.nu][color])
                    throw std::logic_error("twdp: below-bag count exceeds |N_c(v)|");
            }
            t.insert(std::move(s), {ci, -1});
        }
    } else {
        const int pv = child.v_rank(w);
        t.bag_v.erase(std::find(t.bag_v.begin(), t.bag_v.end(), w));
        const int threshold = ctx.inst->v[w - ctx.nu].threshold;
        std::vector<int> counts(C);
        for (int ci = 0; ci < static_cast<int>(child.states.size()); ++ci) {
            const State& cs = child.states[ci];
            // Final per-color counts at w: stored below-bag plus bag pairs.
            for (int c = 0; c < C; ++c) counts[c] = cs[nu_bag_child + pv * C + c];
            for (int i = 0; i < nu_bag_child; ++i)
                if (cs[i] == 2 + pv) counts[ctx.inst->u[child.bag_u[i]].color] += 1;
            int mx = 0, mn = 1 << 30;
            for (int c = 0; c < C; ++c) {
                mx = std::max(mx, counts[c]);
                mn = std::min(mn, counts[c]);
            }
            if (mx - mn > threshold) continue;

            State s(cs.size() - C);
            for (int i = 0; i < nu_bag_child; ++i) {
                uint16_t x = cs[i];
                if (x == 2 + pv)
                    x = 1;  // its partner is now below the bag
                else if (x >= 2 && x - 2 > pv)
                    x -= 1;
                s[i] = x;
            }
            int at = nu_bag_child;
            for (int vi = 0; vi < static_cast<int>(child.bag_v.size()); ++vi) {
                if (vi == pv) continue;
                for (int c = 0; c < C; ++c) s[at++] = cs[nu_bag_child + vi * C + c];
            }
            t.insert(std::move(s), {ci, -1});
        }
    }
    return t;
}

Table transition_join(const Context& ctx, const Table& left, const Table& right) {
    if (left.bag_u != right.bag_u || left.bag_v != right.bag_v)
        throw std::invalid_argument("transition_join: bags differ");
    Table t;
    t.bag_u = left.bag_u;
    t.bag_v = left.bag_v;
    const int nu_bag = static_cast<int>(t.bag_u.size());
    const int C = ctx.colors;
    const size_t y_len = t.bag_v.size() * C;

    // Bucket right states by their bag-matching pattern; unmatched and
    // matched-below slots are interchangeable for pairing, matched slots must
    // coincide exactly.
    auto norm = [&](const State& s) {
        State key(s.begin(), s.begin() + nu_bag);
        for (auto& x : key)
            if (x == 1) x = 0;
        return key;
    };
    std::unordered_map<State, std::vector<int>, StateHash> buckets;
    for (int ri = 0; ri < static_cast<int>(right.states.size()); ++ri)
        buckets[norm(right.states[ri])].push_back(ri);

    for (int li = 0; li < static_cast<int>(left.states.size()); ++li) {
        const State& ls = left.states[li];
        const auto it = buckets.find(norm(ls));
        if (it == buckets.end()) continue;
        for (int ri : it->second) {
            const State& rs = right.states[ri];
            // A u matched below on both sides would be matched twice.
            bool ok = true;
            for (int i = 0; i < nu_bag && ok; ++i)
                if (ls[i] == 1 && rs[i] == 1) ok = false;
            if (!ok) continue;
            State s(ls.size());
            for (int i = 0; i < nu_bag; ++i) s[i] = std::max(ls[i], rs[i]);
            for (size_t j = 0; j < y_len; ++j)
                s[nu_bag + j] = static_cast<uint16_t>(ls[nu_bag + j] + rs[nu_bag + j]);
            for (int vi = 0; vi < static_cast<int>(t.bag_v.size()); ++vi)
                for (int c = 0; c < C; ++c)
                    if (s[nu_bag + vi * C + c] > ctx.n_c[t.bag_v[vi] - ctx.nu][c])
                        throw std::logic_error("twdp: joined count exceeds |N_c(v)|");
            t.insert(std::move(s), {li, ri});
        }
    }
    return t;
}

}  // namespace fairmatch::twdp

namespace fairmatch {

namespace {

double state_cap(const twdp::Context& ctx, const twdp::Table& t) {
    double cap = std::pow(static_cast<double>(t.bag_v.size()) + 2.0,
                          static_cast<double>(t.bag_u.size()));
    for (int v : t.bag_v)
        for (int c = 0; c < ctx.colors; ++c)
            cap *= ctx.n_c[v - ctx.nu][c] + 1.0;
    return std::min(cap, 1e18);
}

}  // namespace

SolveResult solve_twdp(const Instance& inst, const NiceTreeDecomposition& ntd) {
    if (const auto err = validate_nice(ntd, inst))
        throw std::invalid_argument("solve_twdp: invalid decomposition: " + *err);

    const twdp::Context ctx = twdp::make_context(inst);

    std::vector<int> order;  // children before parents
    {
        std::vector<int> stack{ntd.root};
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            order.push_back(t);
            if (ntd.nodes[t].left >= 0) stack.push_back(ntd.nodes[t].left);
            if (ntd.nodes[t].right >= 0) stack.push_back(ntd.nodes[t].right);
        }
        std::reverse(order.begin(), order.end());
    }

    std::vector<twdp::Table> tables(ntd.nodes.size());
    for (int at : order) {
        const NiceNode& nd = ntd.nodes[at];
        switch (nd.kind) {
            case NiceNodeKind::Leaf:
                tables[at] = twdp::make_leaf(ctx);
                break;
            case NiceNodeKind::Introduce:
                tables[at] = twdp::transition_introduce(ctx, tables[nd.left], nd.vertex);
                break;
            case NiceNodeKind::Forget:
                tables[at] = twdp::transition_forget(ctx, tables[nd.left], nd.vertex);
                break;
            case NiceNodeKind::Join:
                tables[at] = twdp::transition_join(ctx, tables[nd.left], tables[nd.right]);
                break;
        }
        if (static_cast<double>(tables[at].states.size()) > state_cap(ctx, tables[at]))
            throw std::logic_error("twdp: sparse table exceeds the state-space bound");
    }

    SolveResult res;
    if (tables[ntd.root].states.empty()) return res;

    // Walk back down from the root state; matched pairs are recorded at
    // introduce nodes.  Both branches of a join record the same pair, hence
    // the dedupe at the end.
    std::vector<Edge> collected;
    std::vector<std::pair<int, int>> stack{{ntd.root, 0}};
    while (!stack.empty()) {
        const auto [at, si] = stack.back();
        stack.pop_back();
        const NiceNode& nd = ntd.nodes[at];
        const twdp::Table& t = tables[at];
        const twdp::BackPointer bp = t.bps[si];
        const twdp::State& s = t.states[si];
        if (nd.kind == NiceNodeKind::Introduce) {
            if (nd.vertex < ctx.nu) {
                const uint16_t x = s[t.u_rank(nd.vertex)];
                if (x >= 2) collected.push_back({nd.vertex, t.bag_v[x - 2] - ctx.nu});
            } else {
                const int pv = t.v_rank(nd.vertex);
                for (size_t i = 0; i < t.bag_u.size(); ++i)
                    if (s[i] == 2 + pv) collected.push_back({t.bag_u[i], nd.vertex - ctx.nu});
            }
        }
        if (nd.left >= 0) stack.push_back({nd.left, bp.a});
        if (nd.right >= 0) stack.push_back({nd.right, bp.b});
    }
    std::sort(collected.begin(), collected.end());
    collected.erase(std::unique(collected.begin(), collected.end()), collected.end());

    res.answer = Answer::Yes;
    res.witness = Matching{std::move(collected)};
    return res;
}

SolveResult solve_twdp(const Instance& inst) {
    const TreeDecomposition td = tree_decomposition(inst);
    return solve_twdp(inst, make_nice(td, inst));
}

}  // namespace fairmatch
