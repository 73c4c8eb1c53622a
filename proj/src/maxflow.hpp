#pragma once

// Dinic max-flow plus a feasible-circulation wrapper (lower bounds eliminated
// through a super source/sink).  Internal to the solvers; arcs are scanned in
// insertion order, so runs are deterministic.

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

namespace fairmatch::flow {

class Dinic {
public:
    explicit Dinic(int n) : graph_(n), level_(n), iter_(n) {}

    int add_arc(int from, int to, int cap) {
        graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
        graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
        return static_cast<int>(graph_[from].size()) - 1;
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (int f = dfs(s, t, std::numeric_limits<int>::max())) total += f;
        }
        return total;
    }

    // Flow pushed on the arc sits on its reverse arc's capacity.
    int arc_flow(int from, int idx) const {
        const Arc& a = graph_[from][idx];
        return graph_[a.to][a.rev].cap;
    }

private:
    struct Arc {
        int to;
        int cap;
        int rev;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const Arc& a : graph_[v])
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    q.push(a.to);
                }
        }
        return level_[t] >= 0;
    }

    int dfs(int v, int t, int limit) {
        if (v == t) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
            Arc& a = graph_[v][i];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            const int pushed = dfs(a.to, t, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                graph_[a.to][a.rev].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> graph_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

// Arc set with lower bounds.  solve() decides whether a circulation meeting
// every [lower, upper] interval exists and returns per-arc flows in insertion
// order.  Callers model s-t flows by closing the cycle with a wide t->s arc.
class Circulation {
public:
    explicit Circulation(int n) : n_(n) {}

    void add_arc(int from, int to, int lower, int upper) {
        arcs_.push_back({from, to, lower, upper});
    }

    std::optional<std::vector<int>> solve() const {
        const int s = n_, t = n_ + 1;
        Dinic dinic(n_ + 2);
        std::vector<std::pair<int, int>> handles;
        handles.reserve(arcs_.size());
        std::vector<long long> excess(n_, 0);
        for (const RawArc& a : arcs_) {
            handles.push_back({a.from, dinic.add_arc(a.from, a.to, a.upper - a.lower)});
            excess[a.to] += a.lower;
            excess[a.from] -= a.lower;
        }
        long long need = 0;
        for (int v = 0; v < n_; ++v) {
            if (excess[v] > 0) {
                dinic.add_arc(s, v, static_cast<int>(excess[v]));
                need += excess[v];
            } else if (excess[v] < 0) {
                dinic.add_arc(v, t, static_cast<int>(-excess[v]));
            }
        }
        if (dinic.max_flow(s, t) != need) return std::nullopt;
        std::vector<int> flows;
        flows.reserve(arcs_.size());
        for (size_t i = 0; i < arcs_.size(); ++i)
            flows.push_back(arcs_[i].lower +
                            dinic.arc_flow(handles[i].first, handles[i].second));
        return flows;
    }

private:
    struct RawArc {
        int from, to, lower, upper;
    };
    int n_;
    std::vector<RawArc> arcs_;
};

}  // namespace fairmatch::flow
