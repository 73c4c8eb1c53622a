#include "fairmatch/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace fairmatch {

using nlohmann::json;

Adjacency make_adjacency(const Instance& inst) {
    Adjacency adj;
    adj.u_adj.resize(inst.u.size());
    adj.v_adj.resize(inst.v.size());
    for (const Edge& e : inst.edges) {
        adj.u_adj[e.u].push_back(e.v);
        adj.v_adj[e.v].push_back(e.u);
    }
    for (auto& nb : adj.u_adj) std::sort(nb.begin(), nb.end());
    for (auto& nb : adj.v_adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    auto report = [&out](const std::string& s) { out.push_back(s); };

    if (inst.num_colors < 1) report("num_colors must be at least 1");

    std::unordered_set<std::string> seen_ids;
    for (int i = 0; i < inst.n_u(); ++i) {
        const UVertex& uv = inst.u[i];
        if (!seen_ids.insert(uv.id).second)
            report("duplicate vertex id '" + uv.id + "'");
        if (uv.color < 0 || uv.color >= inst.num_colors)
            report("u vertex '" + uv.id + "' has color " + std::to_string(uv.color) +
                   " outside [0, " + std::to_string(inst.num_colors) + ")");
    }
    for (int j = 0; j < inst.n_v(); ++j) {
        const VVertex& vv = inst.v[j];
        if (!seen_ids.insert(vv.id).second)
            report("duplicate vertex id '" + vv.id + "'");
        if (vv.threshold < 0)
            report("v vertex '" + vv.id + "' has negative threshold");
    }

    std::set<std::pair<int, int>> seen_edges;
    for (int k = 0; k < inst.n_edges(); ++k) {
        const Edge& e = inst.edges[k];
        const bool u_ok = e.u >= 0 && e.u < inst.n_u();
        const bool v_ok = e.v >= 0 && e.v < inst.n_v();
        if (!u_ok)
            report("edge " + std::to_string(k) + " references unknown u index " +
                   std::to_string(e.u) + " (dangling endpoint)");
        if (!v_ok)
            report("edge " + std::to_string(k) + " references unknown v index " +
                   std::to_string(e.v) + " (dangling endpoint)");
        if (u_ok && v_ok && !seen_edges.insert({e.u, e.v}).second)
            report("duplicate edge (" + inst.u[e.u].id + ", " + inst.v[e.v].id + ")");
    }
    return out;
}

std::vector<int> color_histogram(const Instance& inst, const Matching& m, int v) {
    if (v < 0 || v >= inst.n_v())
        throw std::out_of_range("color_histogram: unknown v index " + std::to_string(v));
    std::vector<int> counts(inst.num_colors, 0);
    for (const Edge& e : m.pairs) {
        if (e.v != v) continue;
        if (e.u < 0 || e.u >= inst.n_u()) continue;
        counts[inst.u[e.u].color] += 1;
    }
    return counts;
}

FairnessReport verify_matching(const Instance& inst, const Matching& m) {
    FairnessReport rep;

    std::set<std::pair<int, int>> edge_set;
    for (const Edge& e : inst.edges) edge_set.insert({e.u, e.v});

    std::vector<int> times_matched(inst.u.size(), 0);
    // counts[v][c]
    std::vector<std::vector<int>> counts(inst.v.size(), std::vector<int>(inst.num_colors, 0));

    for (const Edge& p : m.pairs) {
        if (p.u < 0 || p.u >= inst.n_u() || p.v < 0 || p.v >= inst.n_v()) {
            rep.problems.push_back("pair (" + std::to_string(p.u) + ", " + std::to_string(p.v) +
                                   ") has an out-of-range endpoint");
            continue;
        }
        if (!edge_set.count({p.u, p.v})) {
            rep.problems.push_back("pair (" + inst.u[p.u].id + ", " + inst.v[p.v].id +
                                   ") is not an edge of the instance");
            continue;
        }
        times_matched[p.u] += 1;
        if (times_matched[p.u] > 1) {
            rep.problems.push_back("u vertex '" + inst.u[p.u].id + "' is matched more than once");
            continue;
        }
        counts[p.v][inst.u[p.u].color] += 1;
    }

    rep.left_perfect = true;
    for (int i = 0; i < inst.n_u(); ++i)
        if (times_matched[i] != 1) rep.left_perfect = false;

    bool all_fair = true;
    rep.per_v.reserve(inst.v.size());
    for (int j = 0; j < inst.n_v(); ++j) {
        FairnessPerV pv;
        pv.v = j;
        pv.max_count = 0;
        pv.min_count = 0;
        if (inst.num_colors > 0) {
            pv.max_count = *std::max_element(counts[j].begin(), counts[j].end());
            pv.min_count = *std::min_element(counts[j].begin(), counts[j].end());
        }
        pv.fair = pv.max_count - pv.min_count <= inst.v[j].threshold;
        all_fair = all_fair && pv.fair;
        rep.per_v.push_back(pv);
    }

    rep.overall = rep.left_perfect && all_fair && rep.problems.empty();
    return rep;
}

namespace {

const json& require_field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::runtime_error(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

json instance_to_json(const Instance& inst) {
    json j;
    j["num_colors"] = inst.num_colors;
    j["u"] = json::array();
    for (const UVertex& uv : inst.u) j["u"].push_back({{"id", uv.id}, {"color", uv.color}});
    j["v"] = json::array();
    for (const VVertex& vv : inst.v) j["v"].push_back({{"id", vv.id}, {"l", vv.threshold}});
    j["edges"] = json::array();
    for (const Edge& e : inst.edges)
        j["edges"].push_back(json::array({inst.u[e.u].id, inst.v[e.v].id}));
    return j;
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("instance: document is not a JSON object");
    Instance inst;
    inst.num_colors = require_field(j, "num_colors", "instance").get<int>();

    std::unordered_map<std::string, int> u_index, v_index;
    for (const json& ju : require_field(j, "u", "instance")) {
        UVertex uv;
        uv.id = require_field(ju, "id", "u vertex").get<std::string>();
        uv.color = require_field(ju, "color", "u vertex").get<int>();
        u_index.emplace(uv.id, inst.n_u());
        inst.u.push_back(std::move(uv));
    }
    for (const json& jv : require_field(j, "v", "instance")) {
        VVertex vv;
        vv.id = require_field(jv, "id", "v vertex").get<std::string>();
        vv.threshold = require_field(jv, "l", "v vertex").get<int>();
        v_index.emplace(vv.id, inst.n_v());
        inst.v.push_back(std::move(vv));
    }
    for (const json& je : require_field(j, "edges", "instance")) {
        if (!je.is_array() || je.size() != 2)
            throw std::runtime_error("instance: edge entries must be [u_id, v_id] pairs");
        const std::string us = je[0].get<std::string>();
        const std::string vs = je[1].get<std::string>();
        auto ui = u_index.find(us);
        auto vi = v_index.find(vs);
        if (ui == u_index.end())
            throw std::runtime_error("instance: edge references unknown u id '" + us + "'");
        if (vi == v_index.end())
            throw std::runtime_error("instance: edge references unknown v id '" + vs + "'");
        inst.edges.push_back({ui->second, vi->second});
    }
    return inst;
}

json matching_to_json(const Instance& inst, const Matching& m) {
    json j;
    j["pairs"] = json::array();
    for (const Edge& p : m.pairs)
        j["pairs"].push_back(json::array({inst.u[p.u].id, inst.v[p.v].id}));
    return j;
}

Matching matching_from_json(const json& j, const Instance& inst) {
    if (!j.is_object()) throw std::runtime_error("matching: document is not a JSON object");
    std::unordered_map<std::string, int> u_index, v_index;
    for (int i = 0; i < inst.n_u(); ++i) u_index.emplace(inst.u[i].id, i);
    for (int i = 0; i < inst.n_v(); ++i) v_index.emplace(inst.v[i].id, i);

    Matching m;
    for (const json& jp : require_field(j, "pairs", "matching")) {
        if (!jp.is_array() || jp.size() != 2)
            throw std::runtime_error("matching: pair entries must be [u_id, v_id]");
        const std::string us = jp[0].get<std::string>();
        const std::string vs = jp[1].get<std::string>();
        auto ui = u_index.find(us);
        auto vi = v_index.find(vs);
        if (ui == u_index.end())
            throw std::runtime_error("matching: unknown u id '" + us + "'");
        if (vi == v_index.end())
            throw std::runtime_error("matching: unknown v id '" + vs + "'");
        m.pairs.push_back({ui->second, vi->second});
    }
    return m;
}

json fairness_report_to_json(const Instance& inst, const FairnessReport& r) {
    json j;
    j["left_perfect"] = r.left_perfect;
    j["overall"] = r.overall;
    j["per_v"] = json::array();
    for (const FairnessPerV& pv : r.per_v) {
        j["per_v"].push_back({{"v", inst.v[pv.v].id},
                              {"max_count", pv.max_count},
                              {"min_count", pv.min_count},
                              {"fair", pv.fair}});
    }
    j["problems"] = r.problems;
    return j;
}

namespace {

json load_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string(what) + ": cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string(what) + ": " + e.what());
    }
    return j;
}

void save_json_file(const json& j, const std::string& path, const char* what) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(std::string(what) + ": cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
}

}  // namespace

Instance load_instance(const std::string& path) {
    return instance_from_json(load_json_file(path, "instance"));
}

void save_instance(const Instance& inst, const std::string& path) {
    save_json_file(instance_to_json(inst), path, "instance");
}

Matching load_matching(const std::string& path, const Instance& inst) {
    return matching_from_json(load_json_file(path, "matching"), inst);
}

void save_matching(const Instance& inst, const Matching& m, const std::string& path) {
    save_json_file(matching_to_json(inst, m), path, "matching");
}

}  // namespace fairmatch
