#include <doctest.h>

#include <random>

#include "fairmatch/oracle.hpp"
#include "fairmatch/solver_twdp.hpp"
#include "oracles.hpp"

using namespace fairmatch;
using testref::make_instance;

TEST_CASE("twdp transitions on a hand-built bag") {
    // u0 (color 0) and u1 (color 1) both adjacent to v0 with threshold 0.
    const Instance inst = make_instance(2, {0, 1}, {0}, {{0, 0}, {1, 0}});
    const auto ctx = twdp::make_context(inst);
    const int v0 = inst.n_u() + 0;

    auto t0 = twdp::make_leaf(ctx);
    REQUIRE(t0.states.size() == 1);

    SUBCASE("introducing an isolated-in-bag u yields only the unmatched state") {
        const auto t1 = twdp::transition_introduce(ctx, t0, 0);
        REQUIRE(t1.states.size() == 1);
        CHECK(t1.states[0] == twdp::State{0});
    }

    SUBCASE("introducing v after u offers every subset of eligible partners") {
        auto t1 = twdp::transition_introduce(ctx, t0, 0);
        auto t2 = twdp::transition_introduce(ctx, t1, v0);
        // x_u0 in {0, matched-to-v0}, y zeroed.
        REQUIRE(t2.states.size() == 2);
        auto t3 = twdp::transition_introduce(ctx, t2, 1);
        // times x_u1 in {0, matched-to-v0}
        REQUIRE(t3.states.size() == 4);

        SUBCASE("forgetting v keeps only color-balanced assignments") {
            const auto t4 = twdp::transition_forget(ctx, t3, v0);
            // Both matched (counts 1,1) or both unmatched (0,0) pass L=0.
            REQUIRE(t4.states.size() == 2);
            const auto t5a = twdp::transition_forget(ctx, t4, 0);
            const auto t5b = twdp::transition_forget(ctx, t5a, 1);
            // Only the both-matched branch leaves no unmatched u behind.
            REQUIRE(t5b.states.size() == 1);
        }
    }
}

TEST_CASE("twdp join sums below-bag counts") {
    // Two u's of one color share v0; each branch forgets its u matched to v0.
    const Instance inst = make_instance(1, {0, 0}, {0}, {{0, 0}, {1, 0}});
    const auto ctx = twdp::make_context(inst);
    const int v0 = inst.n_u() + 0;

    auto branch = [&](int u) {
        auto t = twdp::make_leaf(ctx);
        t = twdp::transition_introduce(ctx, t, u);
        t = twdp::transition_introduce(ctx, t, v0);
        return twdp::transition_forget(ctx, t, u);
    };
    const auto left = branch(0), right = branch(1);
    // Each branch keeps the single state y_v0 = 1 (the u-forget drops x = 0).
    REQUIRE(left.states.size() == 1);
    CHECK(left.states[0] == twdp::State{1});
    const auto joined = twdp::transition_join(ctx, left, right);
    REQUIRE(joined.states.size() == 1);
    CHECK(joined.states[0] == twdp::State{2});
}

TEST_CASE("twdp: basic verdicts") {
    SUBCASE("empty instance is Yes with an empty matching") {
        Instance inst;
        inst.num_colors = 1;
        const auto res = solve_twdp(inst);
        REQUIRE(res.answer == Answer::Yes);
        CHECK(res.witness->pairs.empty());
    }
    SUBCASE("isolated u is a No") {
        const Instance inst = make_instance(1, {0, 0}, {0}, {{0, 0}});
        CHECK(solve_twdp(inst).answer == Answer::No);
    }
    SUBCASE("balanced pair is a Yes with a verified witness") {
        const Instance inst = make_instance(2, {0, 1}, {0}, {{0, 0}, {1, 0}});
        const auto res = solve_twdp(inst);
        REQUIRE(res.answer == Answer::Yes);
        CHECK(verify_matching(inst, *res.witness).overall);
    }
}

namespace {

Instance random_instance(std::mt19937_64& rng, int max_u, int max_v, int max_c,
                         int percent) {
    const int nu = 1 + static_cast<int>(rng() % max_u);
    const int nv = 1 + static_cast<int>(rng() % max_v);
    const int nc = 1 + static_cast<int>(rng() % max_c);
    std::vector<int> colors, thresholds;
    for (int i = 0; i < nu; ++i) colors.push_back(static_cast<int>(rng() % nc));
    for (int j = 0; j < nv; ++j) thresholds.push_back(static_cast<int>(rng() % 3));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            if (static_cast<int>(rng() % 100) < percent) edges.push_back({i, j});
    return make_instance(nc, colors, thresholds, edges);
}

}  // namespace

TEST_CASE("twdp equals the oracle on tree instances") {
    std::mt19937_64 rng(90901);
    int used = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const Instance inst = random_instance(rng, 8, 4, 3, 30);
        if (!feedback_edge_set(inst).empty()) continue;
        used++;
        const auto expect = solve_bruteforce(inst);
        REQUIRE(expect.answer != Answer::BudgetExceeded);
        const auto res = solve_twdp(inst);
        CHECK((res.answer == Answer::Yes) == (expect.answer == Answer::Yes));
        if (res.answer == Answer::Yes) CHECK(verify_matching(inst, *res.witness).overall);
    }
    CHECK(used > 80);
}

TEST_CASE("twdp equals the oracle on random instances") {
    std::mt19937_64 rng(90902);
    for (int iter = 0; iter < 200; ++iter) {
        const Instance inst = random_instance(rng, 8, 4, 3, 50);
        const auto expect = solve_bruteforce(inst);
        REQUIRE(expect.answer != Answer::BudgetExceeded);
        const auto res = solve_twdp(inst);
        CHECK((res.answer == Answer::Yes) == (expect.answer == Answer::Yes));
        if (res.answer == Answer::Yes) CHECK(verify_matching(inst, *res.witness).overall);
    }
}

TEST_CASE("twdp verdict does not depend on the decomposition") {
    std::mt19937_64 rng(90903);
    for (int iter = 0; iter < 60; ++iter) {
        const Instance inst = random_instance(rng, 7, 4, 3, 50);
        const auto td_a = tree_decomposition_heuristic(inst, TdHeuristic::MinFill);
        const auto td_b = tree_decomposition_heuristic(inst, TdHeuristic::MinDegree);
        const auto res_a = solve_twdp(inst, make_nice(td_a, inst, 0));
        const auto res_b = solve_twdp(
            inst, make_nice(td_b, inst, static_cast<int>(td_b.bags.size()) - 1));
        CHECK(res_a.answer == res_b.answer);
        if (res_a.answer == Answer::Yes) {
            CHECK(verify_matching(inst, *res_a.witness).overall);
            CHECK(verify_matching(inst, *res_b.witness).overall);
        }
    }
}

TEST_CASE("twdp rejects decompositions for a different instance") {
    const Instance a = make_instance(1, {0}, {0}, {{0, 0}});
    const Instance b = make_instance(1, {0, 0}, {0}, {{0, 0}, {1, 0}});
    const auto ntd = make_nice(tree_decomposition(a), a);
    CHECK_THROWS_AS(solve_twdp(b, ntd), std::invalid_argument);
}
