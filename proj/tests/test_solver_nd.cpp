#include <doctest.h>

#include <random>

#include "fairmatch/oracle.hpp"
#include "fairmatch/solver_nd.hpp"
#include "fairmatch/solver_smallk.hpp"
#include "fairmatch/structure.hpp"
#include "oracles.hpp"

using namespace fairmatch;
using testref::make_instance;

TEST_CASE("preprocess: K2 components") {
    SUBCASE("slack at v keeps the forced pair") {
        const Instance inst = make_instance(2, {0}, {1}, {{0, 0}});
        const auto pre = preprocess(inst);
        CHECK(!pre.early_no);
        REQUIRE(pre.forced.pairs.size() == 1);
        CHECK(pre.reduced.n_u() == 0);
        CHECK(pre.reduced.n_v() == 0);
    }
    SUBCASE("threshold 0 with two colors is an early no") {
        const Instance inst = make_instance(2, {0}, {0}, {{0, 0}});
        CHECK(preprocess(inst).early_no);
    }
    SUBCASE("threshold 0 with a single color stays feasible") {
        const Instance inst = make_instance(1, {0}, {0}, {{0, 0}});
        const auto pre = preprocess(inst);
        CHECK(!pre.early_no);
        CHECK(pre.forced.pairs.size() == 1);
    }
    SUBCASE("isolated u is an early no; isolated v is dropped") {
        Instance inst = make_instance(1, {0, 0}, {0, 0}, {{0, 0}, {1, 0}});
        CHECK(!preprocess(inst).early_no);
        CHECK(preprocess(inst).reduced.n_v() == 1);
        inst.u.push_back({"lonely", 0});
        CHECK(preprocess(inst).early_no);
    }
}

TEST_CASE("build_quotient merges twin v's and sums thresholds") {
    SUBCASE("complete bipartite collapses to one class") {
        const Instance k23 =
            make_instance(1, {0, 0}, {1, 1, 1},
                          {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
        const auto q = build_quotient(k23);
        REQUIRE(q.inner.n_v() == 1);
        CHECK(q.inner.v[0].threshold == 3);
        CHECK(q.class_members[0].size() == 3);
    }
    SUBCASE("two disjoint stars make two classes with summed thresholds") {
        const Instance inst = make_instance(
            1, {0, 0}, {1, 2, 3, 4},
            {{0, 0}, {0, 1}, {1, 2}, {1, 3}});
        const auto q = build_quotient(inst);
        REQUIRE(q.inner.n_v() == 2);
        CHECK(q.inner.v[0].threshold == 3);
        CHECK(q.inner.v[1].threshold == 7);
    }
    SUBCASE("class count equals the v-side twin partition") {
        std::mt19937_64 rng(8123);
        for (int iter = 0; iter < 40; ++iter) {
            const int nu = 1 + static_cast<int>(rng() % 5);
            const int nv = 1 + static_cast<int>(rng() % 5);
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < nu; ++i)
                for (int j = 0; j < nv; ++j)
                    if (rng() % 2) edges.push_back({i, j});
            const Instance raw = make_instance(1, std::vector<int>(nu, 0),
                                               std::vector<int>(nv, 1), edges);
            const auto pre = preprocess(raw);
            if (pre.early_no || pre.reduced.n_v() == 0) continue;
            const auto q = build_quotient(pre.reduced);
            CHECK(q.inner.n_v() ==
                  static_cast<int>(twin_partition(pre.reduced).v_classes.size()));
        }
    }
}

TEST_CASE("split_class_loads follows the quotient/remainder scheme") {
    SUBCASE("single member class is the identity") {
        const auto loads = split_class_loads({2}, {5, 3});
        CHECK(loads[0] == std::vector<int>{5, 3});
    }
    SUBCASE("worked two-member example") {
        // thresholds (1, 3), totals (6, 5): q = (1, 1), r = (2, 1);
        // member shares r: color0 -> (1, 1), color1 -> (1, 0).
        const auto loads = split_class_loads({1, 3}, {6, 5});
        CHECK(loads[0] == std::vector<int>{2, 2});
        CHECK(loads[1] == std::vector<int>{4, 3});
        // Both members stay fair for their own thresholds.
        CHECK(std::abs(loads[0][0] - loads[0][1]) <= 1);
        CHECK(std::abs(loads[1][0] - loads[1][1]) <= 3);
    }
    SUBCASE("zero-threshold class sends everything to the first member") {
        const auto loads = split_class_loads({0, 0}, {4, 4});
        CHECK(loads[0] == std::vector<int>{4, 4});
        CHECK(loads[1] == std::vector<int>{0, 0});
    }
}

TEST_CASE("expand_matching: identity on single-member classes") {
    const Instance inst = make_instance(2, {0, 1}, {0}, {{0, 0}, {1, 0}});
    const auto q = build_quotient(inst);
    REQUIRE(q.inner.n_v() == 1);
    const Matching mq{{{0, 0}, {1, 0}}};
    const auto m = expand_matching(q, inst, mq);
    CHECK(verify_matching(inst, m).overall);
}

TEST_CASE("expand_matching rejects unfair quotient matchings") {
    const Instance inst = make_instance(2, {0, 0}, {0}, {{0, 0}, {1, 0}});
    const auto q = build_quotient(inst);
    CHECK_THROWS_AS(expand_matching(q, inst, Matching{{{0, 0}, {1, 0}}}),
                    std::invalid_argument);
}

namespace {

Instance random_pattern(std::mt19937_64& rng) {
    const int nu = 1 + static_cast<int>(rng() % 4);
    const int nv = 1 + static_cast<int>(rng() % 2);
    const int nc = 1 + static_cast<int>(rng() % 3);
    std::vector<int> colors, thresholds;
    for (int i = 0; i < nu; ++i) colors.push_back(static_cast<int>(rng() % nc));
    for (int j = 0; j < nv; ++j) thresholds.push_back(static_cast<int>(rng() % 4));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            if (rng() % 100 < 60) edges.push_back({i, j});
    return make_instance(nc, colors, thresholds, edges);
}

// Duplicates each v into copies whose thresholds sum to the original; by the
// twin-contraction equivalence the verdict is preserved.
Instance blow_up_v(const Instance& pattern, std::mt19937_64& rng, int copies_per_v) {
    Instance out;
    out.num_colors = pattern.num_colors;
    out.u = pattern.u;
    std::vector<std::vector<int>> v_copies(pattern.v.size());
    for (int j = 0; j < pattern.n_v(); ++j) {
        std::vector<int> split(copies_per_v, 0);
        for (int left = pattern.v[j].threshold; left > 0; --left)
            split[rng() % copies_per_v] += 1;
        for (int k = 0; k < copies_per_v; ++k) {
            v_copies[j].push_back(out.n_v());
            out.v.push_back(
                {pattern.v[j].id + "#" + std::to_string(k), split[k]});
        }
    }
    for (const Edge& e : pattern.edges)
        for (int copy : v_copies[e.v]) out.edges.push_back({e.u, copy});
    return out;
}

}  // namespace

TEST_CASE("solve_nd equals oracle on small instances") {
    std::mt19937_64 rng(314159);
    for (int iter = 0; iter < 300; ++iter) {
        const int nu = 1 + static_cast<int>(rng() % 8);
        const int nv = 1 + static_cast<int>(rng() % 6);
        const int nc = 1 + static_cast<int>(rng() % 3);
        std::vector<int> colors, thresholds;
        for (int i = 0; i < nu; ++i) colors.push_back(static_cast<int>(rng() % nc));
        for (int j = 0; j < nv; ++j) thresholds.push_back(static_cast<int>(rng() % 3));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nv; ++j)
                if (rng() % 2) edges.push_back({i, j});
        const Instance inst = make_instance(nc, colors, thresholds, edges);

        const auto expect = solve_bruteforce(inst);
        REQUIRE(expect.answer != Answer::BudgetExceeded);
        const auto res = solve_nd(inst);
        CHECK((res.answer == Answer::Yes) == (expect.answer == Answer::Yes));
        if (res.answer == Answer::Yes) CHECK(verify_matching(inst, *res.witness).overall);
    }
}

TEST_CASE("solve_nd on 200-vertex blow-ups matches the pattern verdict") {
    std::mt19937_64 rng(2718);
    int done = 0;
    for (int iter = 0; iter < 40 && done < 25; ++iter) {
        const Instance pattern = random_pattern(rng);
        const auto expect = solve_bruteforce(pattern);
        REQUIRE(expect.answer != Answer::BudgetExceeded);

        const int copies = 200 / std::max(1, pattern.n_v());
        const Instance big = blow_up_v(pattern, rng, copies);
        if (big.n_vertices() < 100) continue;
        done++;
        const auto res = solve_nd(big);
        CHECK((res.answer == Answer::Yes) == (expect.answer == Answer::Yes));
        if (res.answer == Answer::Yes) {
            const auto rep = verify_matching(big, *res.witness);
            CHECK(rep.overall);
        }
    }
    CHECK(done >= 25);
}

TEST_CASE("solve_nd: early-no instances skip the quotient solve") {
    const Instance inst = make_instance(2, {0}, {0}, {{0, 0}});
    CHECK(solve_nd(inst).answer == Answer::No);
}

TEST_CASE("solve_nd equals solve_smallk when the quotient has one class") {
    std::mt19937_64 rng(1618);
    for (int iter = 0; iter < 50; ++iter) {
        const int nu = 2 + static_cast<int>(rng() % 6);
        const int nv = 1 + static_cast<int>(rng() % 4);
        const int nc = 1 + static_cast<int>(rng() % 3);
        std::vector<int> colors, thresholds;
        for (int i = 0; i < nu; ++i) colors.push_back(static_cast<int>(rng() % nc));
        for (int j = 0; j < nv; ++j) thresholds.push_back(static_cast<int>(rng() % 3));
        std::vector<std::pair<int, int>> edges;  // complete bipartite: one class
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nv; ++j) edges.push_back({i, j});
        const Instance inst = make_instance(nc, colors, thresholds, edges);
        CHECK((solve_nd(inst).answer == Answer::Yes) ==
              (solve_smallk(inst).answer == Answer::Yes));
    }
}
