#include <doctest.h>

#include <random>

#include "fairmatch/oracle.hpp"
#include "fairmatch/solver_smallk.hpp"
#include "oracles.hpp"

using namespace fairmatch;
using testref::make_instance;

TEST_CASE("ilp1_feasible: complete pair on one v is forced to (1,1)") {
    const Instance inst = make_instance(2, {0, 1}, {0}, {{0, 0}, {1, 0}});
    const auto iv = ilp1_feasible(inst);
    REQUIRE(iv.has_value());
    CHECK(iv->x[0] == 1);
    CHECK(iv->y[0] == 1);
    CHECK(!ilp1_check_all(inst, *iv));
}

TEST_CASE("ilp1_feasible: an uncoverable color forces infeasibility") {
    const Instance inst = make_instance(2, {0}, {0}, {{0, 0}});
    CHECK(!ilp1_feasible(inst).has_value());
}

TEST_CASE("ilp1_feasible: a u without neighbors forces infeasibility") {
    const Instance inst = make_instance(1, {0, 0}, {0}, {{0, 0}});
    CHECK(!ilp1_feasible(inst).has_value());
}

TEST_CASE("ilp1_feasible rejects oversized V") {
    std::vector<int> thresholds(smallk_max_v + 1, 0);
    const Instance inst = make_instance(1, {}, thresholds, {});
    CHECK_THROWS_AS(ilp1_feasible(inst), std::invalid_argument);
}

TEST_CASE("reconstruct_from_intervals on the forced example") {
    const Instance inst = make_instance(2, {0, 1}, {0}, {{0, 0}, {1, 0}});
    const auto m = reconstruct_from_intervals(inst, {{1}, {1}});
    REQUIRE(m.pairs.size() == 2);
    CHECK(verify_matching(inst, m).overall);
}

TEST_CASE("reconstruct_from_intervals: empty U yields the empty matching") {
    const Instance inst = make_instance(1, {}, {0, 0}, {});
    const auto m = reconstruct_from_intervals(inst, {{0, 0}, {0, 0}});
    CHECK(m.pairs.empty());
}

namespace {

Instance random_instance(std::mt19937_64& rng, int max_u, int max_v, int max_c) {
    const int nu = 1 + static_cast<int>(rng() % max_u);
    const int nv = 1 + static_cast<int>(rng() % max_v);
    const int nc = 1 + static_cast<int>(rng() % max_c);
    std::vector<int> colors, thresholds;
    for (int i = 0; i < nu; ++i) colors.push_back(static_cast<int>(rng() % nc));
    for (int j = 0; j < nv; ++j) thresholds.push_back(static_cast<int>(rng() % 3));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            if (rng() % 2) edges.push_back({i, j});
    return make_instance(nc, colors, thresholds, edges);
}

}  // namespace

TEST_CASE("ilp1 feasibility is equivalent to the oracle verdict (small k)") {
    std::mt19937_64 rng(555111);
    int yes = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const Instance inst = random_instance(rng, 10, 3, 3);
        const auto expect = solve_bruteforce(inst);
        REQUIRE(expect.answer != Answer::BudgetExceeded);
        const auto iv = ilp1_feasible(inst);
        CHECK(iv.has_value() == (expect.answer == Answer::Yes));
        if (iv) {
            yes++;
            const auto err = ilp1_check_all(inst, *iv);
            CHECK_MESSAGE(!err, err.value_or(""));
            const auto m = reconstruct_from_intervals(inst, *iv);
            CHECK(verify_matching(inst, m).overall);
            // Per-color loads stay inside [x_v, y_v].
            for (int v = 0; v < inst.n_v(); ++v) {
                const auto hist = color_histogram(inst, m, v);
                for (int c = 0; c < inst.num_colors; ++c) {
                    CHECK(hist[c] >= iv->x[v]);
                    CHECK(hist[c] <= iv->y[v]);
                }
            }
        }
    }
    CHECK(yes > 50);
}

TEST_CASE("solve_smallk composition matches the oracle") {
    std::mt19937_64 rng(555222);
    for (int iter = 0; iter < 150; ++iter) {
        const Instance inst = random_instance(rng, 8, 4, 3);
        const auto expect = solve_bruteforce(inst);
        REQUIRE(expect.answer != Answer::BudgetExceeded);
        const auto res = solve_smallk(inst);
        CHECK((res.answer == Answer::Yes) == (expect.answer == Answer::Yes));
        if (res.answer == Answer::Yes) CHECK(verify_matching(inst, *res.witness).overall);
    }
}

TEST_CASE("solve_smallk handles larger U sides with few v's") {
    // Shaped like quotient instances: many u's over a couple of v's.
    std::mt19937_64 rng(555333);
    for (int iter = 0; iter < 10; ++iter) {
        const int nu = 60 + static_cast<int>(rng() % 60);
        std::vector<int> colors;
        for (int i = 0; i < nu; ++i) colors.push_back(static_cast<int>(rng() % 3));
        std::vector<int> thresholds = {static_cast<int>(rng() % 4),
                                       static_cast<int>(rng() % 4)};
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < 2; ++j)
                if (rng() % 100 < 70) edges.push_back({i, j});
        const Instance inst = make_instance(3, colors, thresholds, edges);
        const auto res = solve_smallk(inst);
        if (res.answer == Answer::Yes)
            CHECK(verify_matching(inst, *res.witness).overall);
    }
}
