#include "fairmatch/solver_nd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fairmatch/solver_smallk.hpp"
#include "fairmatch/structure.hpp"

namespace fairmatch {

PreprocessResult preprocess(const Instance& inst) {
    const Adjacency adj = make_adjacency(inst);
    PreprocessResult out;

    std::vector<char> drop_u(inst.u.size(), 0), drop_v(inst.v.size(), 0);
    for (int u = 0; u < inst.n_u(); ++u)
        if (adj.u_adj[u].empty()) out.early_no = true;
    for (int v = 0; v < inst.n_v(); ++v)
        if (adj.v_adj[v].empty()) drop_v[v] = 1;

    // K2 components force their single edge into the matching; the lone
    // matched vertex is fair only with one color overall or slack at v.
    for (int u = 0; u < inst.n_u(); ++u) {
        if (adj.u_adj[u].size() != 1) continue;
        const int v = adj.u_adj[u][0];
        if (adj.v_adj[v].size() != 1) continue;
        const bool fair = inst.num_colors == 1 || inst.v[v].threshold >= 1;
        if (!fair) out.early_no = true;
        out.forced.pairs.push_back({u, v});
        drop_u[u] = 1;
        drop_v[v] = 1;
    }

    std::vector<int> u_new(inst.u.size(), -1), v_new(inst.v.size(), -1);
    out.reduced.num_colors = inst.num_colors;
    for (int u = 0; u < inst.n_u(); ++u) {
        if (drop_u[u]) continue;
        u_new[u] = out.reduced.n_u();
        out.u_orig.push_back(u);
        out.reduced.u.push_back(inst.u[u]);
    }
    for (int v = 0; v < inst.n_v(); ++v) {
        if (drop_v[v]) continue;
        v_new[v] = out.reduced.n_v();
        out.v_orig.push_back(v);
        out.reduced.v.push_back(inst.v[v]);
    }
    for (const Edge& e : inst.edges)
        if (u_new[e.u] >= 0 && v_new[e.v] >= 0)
            out.reduced.edges.push_back({u_new[e.u], v_new[e.v]});
    return out;
}

QuotientInstance build_quotient(const Instance& reduced) {
    QuotientInstance q;
    q.inner.num_colors = reduced.num_colors;
    q.inner.u = reduced.u;
    if (reduced.n_v() == 0) return q;

    const TwinPartition tp = twin_partition(reduced);
    const Adjacency adj = make_adjacency(reduced);
    q.class_members = tp.v_classes;
    for (auto& members : q.class_members)
        std::sort(members.begin(), members.end(), [&](int a, int b) {
            if (reduced.v[a].threshold != reduced.v[b].threshold)
                return reduced.v[a].threshold > reduced.v[b].threshold;
            return a < b;
        });

    for (const auto& members : q.class_members) {
        int sum_l = 0;
        for (int v : members) sum_l += reduced.v[v].threshold;
        // The smallest member id keeps quotient ids unique and readable.
        const int rep = *std::min_element(members.begin(), members.end());
        q.inner.v.push_back({reduced.v[rep].id, sum_l});
    }
    for (size_t i = 0; i < q.class_members.size(); ++i)
        for (int u : adj.v_adj[q.class_members[i][0]])
            q.inner.edges.push_back({u, static_cast<int>(i)});
    return q;
}

std::vector<std::vector<int>> split_class_loads(const std::vector<int>& member_thresholds,
                                                const std::vector<int>& totals) {
    const int s = static_cast<int>(member_thresholds.size());
    int sum_l = 0;
    for (int l : member_thresholds) sum_l += l;

    std::vector<std::vector<int>> loads(s, std::vector<int>(totals.size(), 0));
    for (size_t c = 0; c < totals.size(); ++c) {
        if (sum_l == 0) {
            loads[0][c] = totals[c];
            continue;
        }
        const int quot = totals[c] / sum_l;
        int rem = totals[c] % sum_l;
        for (int j = 0; j < s; ++j) {
            const int share = std::min(rem, member_thresholds[j]);
            loads[j][c] = quot * member_thresholds[j] + share;
            rem -= share;
        }
    }
    return loads;
}

Matching expand_matching(const QuotientInstance& q, const Instance& reduced,
                         const Matching& mq) {
    const auto rep = verify_matching(q.inner, mq);
    if (!rep.overall)
        throw std::invalid_argument("expand_matching: quotient matching is not fair");

    Matching out;
    for (size_t i = 0; i < q.class_members.size(); ++i) {
        const auto& members = q.class_members[i];
        std::vector<int> thresholds;
        thresholds.reserve(members.size());
        for (int v : members) thresholds.push_back(reduced.v[v].threshold);

        // Matched u's per color, lowest index first.
        std::vector<std::vector<int>> matched(q.inner.num_colors);
        for (const Edge& p : mq.pairs)
            if (p.v == static_cast<int>(i)) matched[q.inner.u[p.u].color].push_back(p.u);
        for (auto& lst : matched) std::sort(lst.begin(), lst.end());

        std::vector<int> totals(q.inner.num_colors);
        for (int c = 0; c < q.inner.num_colors; ++c)
            totals[c] = static_cast<int>(matched[c].size());
        const auto loads = split_class_loads(thresholds, totals);

        for (int c = 0; c < q.inner.num_colors; ++c) {
            size_t at = 0;
            for (size_t j = 0; j < members.size(); ++j)
                for (int take = 0; take < loads[j][c]; ++take)
                    out.pairs.push_back({matched[c][at++], members[j]});
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

SolveResult solve_nd(const Instance& inst) {
    SolveResult res;
    const PreprocessResult pre = preprocess(inst);
    if (pre.early_no) return res;

    const QuotientInstance q = build_quotient(pre.reduced);
    SolveResult inner = solve_smallk(q.inner);
    if (inner.answer != Answer::Yes) return res;

    const Matching expanded = expand_matching(q, pre.reduced, *inner.witness);
    Matching witness = pre.forced;
    for (const Edge& p : expanded.pairs)
        witness.pairs.push_back({pre.u_orig[p.u], pre.v_orig[p.v]});
    std::sort(witness.pairs.begin(), witness.pairs.end());

    res.answer = Answer::Yes;
    res.witness = std::move(witness);
    return res;
}

}  // namespace fairmatch
