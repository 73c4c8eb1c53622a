#include "fairmatch/solver_smallk.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "maxflow.hpp"

namespace fairmatch {

namespace {

// Constraint tables over all subsets W of V, indexed by bitmask:
//   demand[W] = max_c |nu_c(W)|   (forces sum of y over W upward)
//   supply[W] = min_c |N_c(W)|    (caps sum of x over W)
struct WTables {
    int k = 0;
    std::vector<int> demand;
    std::vector<int> supply;
    std::vector<int> y_cap;  // per v: max_c |N_c({v})|
};

WTables build_tables(const Instance& inst) {
    WTables t;
    t.k = inst.n_v();
    const uint32_t full = (t.k == 0) ? 0 : ((1u << t.k) - 1);

    std::vector<uint32_t> u_mask(inst.u.size(), 0);
    for (const Edge& e : inst.edges) u_mask[e.u] |= 1u << e.v;

    std::vector<int> color_pop(inst.num_colors, 0);
    for (const UVertex& uv : inst.u) color_pop[uv.color]++;

    t.demand.assign(full + 1, 0);
    t.supply.assign(full + 1, 1 << 30);
    std::vector<int> sos(full + 1);
    for (int c = 0; c < inst.num_colors; ++c) {
        // sos[W] = #(color-c u's whose neighborhood is contained in W)
        std::fill(sos.begin(), sos.end(), 0);
        for (int u = 0; u < inst.n_u(); ++u)
            if (inst.u[u].color == c) sos[u_mask[u]]++;
        for (int b = 0; b < t.k; ++b)
            for (uint32_t w = 0; w <= full; ++w)
                if (w & (1u << b)) sos[w] += sos[w ^ (1u << b)];
        for (uint32_t w = 0; w <= full; ++w) {
            t.demand[w] = std::max(t.demand[w], sos[w]);
            t.supply[w] = std::min(t.supply[w], color_pop[c] - sos[full & ~w]);
        }
    }

    t.y_cap.assign(t.k, 0);
    std::vector<std::vector<int>> per_vc(t.k, std::vector<int>(inst.num_colors, 0));
    for (const Edge& e : inst.edges) per_vc[e.v][inst.u[e.u].color]++;
    for (int v = 0; v < t.k; ++v)
        for (int c = 0; c < inst.num_colors; ++c)
            t.y_cap[v] = std::max(t.y_cap[v], per_vc[v][c]);
    return t;
}

struct Box {
    std::vector<int> lo, hi;
};

// Interval tightening: any feasible y in the box satisfies, for every W,
// sum_W y >= demand(W) and sum_W max(0, y - L) <= supply(W); x is taken at
// its pointwise minimum max(0, y - L).  Returns false when the box is
// provably empty.
bool propagate(const Instance& inst, const WTables& t, Box& box) {
    const int k = t.k;
    if (k == 0) return true;
    const uint32_t full = (1u << k) - 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < k; ++v)
            if (box.lo[v] > box.hi[v]) return false;
        for (uint32_t w = 1; w <= full; ++w) {
            long long sum_hi = 0, sum_xlo = 0;
            for (uint32_t bits = w; bits;) {
                const int v = std::countr_zero(bits);
                bits &= bits - 1;
                sum_hi += box.hi[v];
                sum_xlo += std::max(0, box.lo[v] - inst.v[v].threshold);
            }
            if (sum_hi < t.demand[w]) return false;
            if (sum_xlo > t.supply[w]) return false;
            for (uint32_t bits = w; bits;) {
                const int v = std::countr_zero(bits);
                bits &= bits - 1;
                const int xlo = std::max(0, box.lo[v] - inst.v[v].threshold);
                const long long need = t.demand[w] - (sum_hi - box.hi[v]);
                if (need > box.lo[v]) {
                    if (need > box.hi[v]) return false;
                    box.lo[v] = static_cast<int>(need);
                    changed = true;
                }
                const long long cap =
                    inst.v[v].threshold + (t.supply[w] - (sum_xlo - xlo));
                if (cap < box.hi[v]) {
                    if (cap < box.lo[v]) return false;
                    box.hi[v] = static_cast<int>(cap);
                    changed = true;
                }
            }
        }
    }
    return true;
}

std::optional<std::string> check_point(const Instance& inst, const WTables& t,
                                       const IntervalAssignment& iv) {
    const int k = t.k;
    for (int v = 0; v < k; ++v) {
        if (iv.x[v] < 0 || iv.y[v] < iv.x[v])
            return "interval constraint violated at v" + std::to_string(v);
        if (iv.y[v] - iv.x[v] > inst.v[v].threshold)
            return "threshold constraint violated at v" + std::to_string(v);
    }
    const uint64_t count = 1ull << k;
    for (uint64_t w = 0; w < count; ++w) {
        long long sy = 0, sx = 0;
        for (uint64_t bits = w; bits;) {
            const int v = std::countr_zero(bits);
            bits &= bits - 1;
            sy += iv.y[v];
            sx += iv.x[v];
        }
        if (sy < t.demand[w]) return "y demand violated for W mask " + std::to_string(w);
        if (sx > t.supply[w]) return "x supply violated for W mask " + std::to_string(w);
    }
    return std::nullopt;
}

}  // namespace

std::optional<IntervalAssignment> ilp1_feasible(const Instance& inst) {
    if (inst.n_v() > smallk_max_v)
        throw std::invalid_argument("ilp1_feasible: |V| exceeds " +
                                    std::to_string(smallk_max_v));
    const WTables t = build_tables(inst);
    const int k = t.k;

    // W = {}: an u with no neighbors at all cannot be covered by any y.
    if (t.demand[0] > 0) return std::nullopt;

    Box root;
    root.lo.assign(k, 0);
    root.hi = t.y_cap;

    std::optional<IntervalAssignment> found;
    // Depth-first box splitting on the widest coordinate, lower half first.
    auto rec = [&](auto&& self, Box box) -> void {
        if (found) return;
        if (!propagate(inst, t, box)) return;
        int widest = -1;
        for (int v = 0; v < k; ++v)
            if (box.lo[v] < box.hi[v] &&
                (widest < 0 || box.hi[v] - box.lo[v] > box.hi[widest] - box.lo[widest]))
                widest = v;
        if (widest < 0) {
            IntervalAssignment iv;
            iv.y = box.lo;
            iv.x.resize(k);
            for (int v = 0; v < k; ++v)
                iv.x[v] = std::max(0, iv.y[v] - inst.v[v].threshold);
            if (!check_point(inst, t, iv)) found = std::move(iv);
            return;
        }
        const int mid = box.lo[widest] + (box.hi[widest] - box.lo[widest]) / 2;
        Box low = box, high = std::move(box);
        low.hi[widest] = mid;
        high.lo[widest] = mid + 1;
        self(self, std::move(low));
        self(self, std::move(high));
    };
    rec(rec, std::move(root));
    return found;
}

std::optional<std::string> ilp1_check_all(const Instance& inst,
                                          const IntervalAssignment& iv) {
    if (inst.n_v() > smallk_max_v)
        throw std::invalid_argument("ilp1_check_all: |V| exceeds " +
                                    std::to_string(smallk_max_v));
    return check_point(inst, build_tables(inst), iv);
}

Matching reconstruct_from_intervals(const Instance& inst, const IntervalAssignment& iv) {
    Matching out;
    const int k = inst.n_v();
    for (int c = 0; c < inst.num_colors; ++c) {
        std::vector<int> members;
        for (int u = 0; u < inst.n_u(); ++u)
            if (inst.u[u].color == c) members.push_back(u);
        if (members.empty()) continue;

        // One circulation per color: source -> u (exactly one unit), u -> its
        // neighbors, v -> sink within [x_v, y_v], sink -> source closes it.
        const int src = 0, base_u = 1;
        const int base_v = base_u + static_cast<int>(members.size());
        const int sink = base_v + k;
        flow::Circulation circ(sink + 1);
        size_t arc_index = 0;
        for (size_t i = 0; i < members.size(); ++i) {
            circ.add_arc(src, base_u + static_cast<int>(i), 1, 1);
            arc_index++;
        }
        std::vector<std::pair<size_t, Edge>> edge_arcs;
        for (const Edge& e : inst.edges) {
            if (inst.u[e.u].color != c) continue;
            const auto it = std::lower_bound(members.begin(), members.end(), e.u);
            circ.add_arc(base_u + static_cast<int>(it - members.begin()),
                         base_v + e.v, 0, 1);
            edge_arcs.push_back({arc_index++, e});
        }
        for (int v = 0; v < k; ++v) {
            circ.add_arc(base_v + v, sink, iv.x[v], iv.y[v]);
            arc_index++;
        }
        circ.add_arc(sink, src, 0, static_cast<int>(members.size()));

        const auto flows = circ.solve();
        if (!flows)
            throw std::logic_error(
                "reconstruct_from_intervals: circulation infeasible for color " +
                std::to_string(c) + "; the assignment was not feasible");
        for (const auto& [idx, e] : edge_arcs)
            if ((*flows)[idx] == 1) out.pairs.push_back(e);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

SolveResult solve_smallk(const Instance& inst) {
    SolveResult res;
    const auto iv = ilp1_feasible(inst);
    if (!iv) return res;
    res.answer = Answer::Yes;
    res.witness = reconstruct_from_intervals(inst, *iv);
    return res;
}

}  // namespace fairmatch
