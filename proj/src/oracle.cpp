#include "fairmatch/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairmatch {

namespace {

struct BudgetExhausted {};

struct SearchState {
    std::vector<int> assign;                   // u -> v, or -1
    std::vector<std::vector<int>> feasible;    // per unassigned u, candidate v's (sorted)
    std::vector<std::vector<int>> committed;   // per v, per color
    std::vector<std::vector<int>> assignable;  // per v, per color
    int unassigned = 0;
};

class Oracle {
public:
    Oracle(const Instance& inst, long long budget)
        : inst_(inst), budget_(budget) {}

    SolveResult run() {
        SearchState root;
        root.assign.assign(inst_.n_u(), -1);
        root.feasible.resize(inst_.n_u());
        root.committed.assign(inst_.n_v(), std::vector<int>(inst_.num_colors, 0));
        root.assignable.assign(inst_.n_v(), std::vector<int>(inst_.num_colors, 0));
        for (const Edge& e : inst_.edges) {
            root.feasible[e.u].push_back(e.v);
            root.assignable[e.v][inst_.u[e.u].color] += 1;
        }
        for (auto& f : root.feasible) std::sort(f.begin(), f.end());
        root.unassigned = inst_.n_u();

        SolveResult res;
        try {
            if (search(root)) {
                res.answer = Answer::Yes;
                Matching m;
                for (int u = 0; u < inst_.n_u(); ++u) m.pairs.push_back({u, solution_[u]});
                res.witness = std::move(m);
            } else {
                res.answer = Answer::No;
            }
        } catch (const BudgetExhausted&) {
            res.answer = Answer::BudgetExceeded;
        }
        res.nodes_explored = nodes_;
        return res;
    }

private:
    void spend() {
        if (++nodes_ > budget_) throw BudgetExhausted{};
    }

    // Committed-count interval test at v: every completion's per-color count
    // lies in [committed, committed + assignable]; if even the extremes cannot
    // fit within the threshold, the state is dead.
    bool v_alive(const SearchState& s, int v) const {
        int max_lo = 0, min_hi = 1 << 30;
        for (int c = 0; c < inst_.num_colors; ++c) {
            max_lo = std::max(max_lo, s.committed[v][c]);
            min_hi = std::min(min_hi, s.committed[v][c] + s.assignable[v][c]);
        }
        return max_lo - min_hi <= inst_.v[v].threshold;
    }

    // Would committing one more vertex of color c to v leave v alive?
    bool commit_ok(const SearchState& s, int v, int c) const {
        int max_lo = 0, min_hi = 1 << 30;
        for (int cc = 0; cc < inst_.num_colors; ++cc) {
            const int lo = s.committed[v][cc] + (cc == c ? 1 : 0);
            const int hi = s.committed[v][cc] + s.assignable[v][cc];
            max_lo = std::max(max_lo, lo);
            min_hi = std::min(min_hi, hi);
        }
        return max_lo - min_hi <= inst_.v[v].threshold;
    }

    void commit(SearchState& s, int u, int v) {
        spend();
        const int c = inst_.u[u].color;
        for (int w : s.feasible[u]) s.assignable[w][c] -= 1;
        s.feasible[u].clear();
        s.assign[u] = v;
        s.committed[v][c] += 1;
        s.unassigned -= 1;
    }

    // Propagation to fixpoint: filter feasible neighbors by the commit test,
    // commit units, fail on dead u's or dead v's.
    bool propagate(SearchState& s) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < inst_.n_v(); ++v)
                if (!v_alive(s, v)) return false;
            for (int u = 0; u < inst_.n_u(); ++u) {
                if (s.assign[u] >= 0) continue;
                const int c = inst_.u[u].color;
                auto& feas = s.feasible[u];
                size_t kept = 0;
                for (size_t i = 0; i < feas.size(); ++i) {
                    if (commit_ok(s, feas[i], c)) {
                        feas[kept++] = feas[i];
                    } else {
                        s.assignable[feas[i]][c] -= 1;
                        changed = true;
                    }
                }
                feas.resize(kept);
                if (feas.empty()) return false;
                if (feas.size() == 1) {
                    commit(s, u, feas[0]);
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search(SearchState s) {
        spend();
        if (!propagate(s)) return false;
        if (s.unassigned == 0) {
            solution_ = s.assign;
            return true;
        }
        // Fail-first: branch on the u with the fewest remaining options.
        int pick = -1;
        for (int u = 0; u < inst_.n_u(); ++u) {
            if (s.assign[u] >= 0) continue;
            if (pick < 0 || s.feasible[u].size() < s.feasible[pick].size()) pick = u;
        }
        const std::vector<int> options = s.feasible[pick];
        for (int v : options) {
            SearchState child = s;
            commit(child, pick, v);
            if (search(std::move(child))) return true;
        }
        return false;
    }

    const Instance& inst_;
    long long budget_;
    long long nodes_ = 0;
    std::vector<int> solution_;
};

}  // namespace

SolveResult solve_bruteforce(const Instance& inst, long long node_budget) {
    return Oracle(inst, node_budget).run();
}

}  // namespace fairmatch
