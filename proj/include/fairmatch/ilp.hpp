#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fairmatch/instance.hpp"
#include "fairmatch/structure.hpp"

// Integer-program builders and structural analysis.  The edge formulation
// ("ilp2") has one binary variable per edge plus per-v load bounds; its dual
// graph (constraints as vertices, adjacent when sharing a variable) embeds
// into the instance graph with every v blown up into a clique of size
// |C| + 1, which bounds its tree-depth.  Solving the models is out of scope;
// they are built, exported, analyzed, and checked by bounded enumeration.

namespace fairmatch {

enum class RowSense { LE, GE, EQ };

struct IlpColumn {
    std::string name;
    long long lb = 0;
    long long ub = 0;
    bool integral = true;
    bool binary = false;
};

struct IlpRow {
    std::string name;
    std::vector<std::pair<int, long long>> coeffs;  // (column index, coefficient)
    RowSense sense = RowSense::LE;
    long long rhs = 0;
    // Dual-graph grouping: rows sharing a group id form one dual vertex
    // (the two sides of a two-row range constraint); -1 keeps a row alone.
    int group = -1;
    std::string tag;  // constraint family
    int ref_u = -1, ref_v = -1, ref_c = -1;
};

struct IlpModel {
    std::string name;
    std::vector<IlpColumn> columns;
    std::vector<IlpRow> rows;

    long long max_abs_coeff() const;
};

// Edge formulation: per u a partition row (tag "u"), per v a fairness row
// y_v - x_v <= L(v) (tag "fair"), and per (v, c) the two load rows
// sum_{u in U_c} x_uv >= x_v and <= y_v (tags "load_lo"/"load_hi", grouped).
// |U| + |V| + 2|V||C| rows and |E| + 2|V| columns.
IlpModel build_ilp2(const Instance& inst);

// Subset formulation with all 2^|V| constraints expanded; |V| is capped by
// smallk_max_v's practical sibling here.
inline constexpr int ilp1_export_max_v = 16;
IlpModel build_ilp1(const Instance& inst);

struct DualGraph {
    int n = 0;  // row groups
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> group_of_row;  // model row index -> dual vertex

    SimpleGraph to_simple() const;
};

DualGraph dual_graph(const IlpModel& model);

struct StructuralReport {
    long long max_abs_coeff = 0;
    bool uv_rows_stable = false;
    bool blowup_subgraph = false;
    // Exact tree-depth comparison td(dual) <= (|C|+1) td(G), computed only
    // when both graphs fit the exact solver.
    std::optional<int> td_dual;
    std::optional<int> td_instance;
    std::optional<bool> td_bound_ok;
};

StructuralReport structural_report(const Instance& inst, const IlpModel& model);

// CPLEX-style LP text (zero objective, Subject To, Bounds, Binaries/Generals,
// End), deterministic order, losslessly re-parsable by parse_lp.
void export_lp(const IlpModel& model, std::ostream& out);
std::string export_lp_string(const IlpModel& model);
IlpModel parse_lp(std::istream& in);

// Feasibility by depth-first enumeration over the integer boxes of all
// columns with row-interval pruning; nullopt when the box volume exceeds
// combo_budget.
std::optional<bool> ilp_feasible_enumerate(const IlpModel& model,
                                           long long combo_budget = 1'000'000);

}  // namespace fairmatch
