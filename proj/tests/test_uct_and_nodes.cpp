#include <cmath>

#include "doctest.h"
#include "mcts/domains/grid_world.hpp"
#include "mcts/generic_solver.hpp"
#include "mcts/solver.hpp"

using namespace mcts;
using namespace mcts::domains;

TEST_CASE("uct score matches the hand-evaluated formula") {
    NodeStats child;

    // ln 1 = 0: a single-visit child under a single-visit parent scores its mean.
    child.record(0.0);
    CHECK(uct_score(1, child, 1.0) == doctest::Approx(0.0));

    // n = 100, n' = 10, mean 0.5, C = 1.
    NodeStats busy;
    for (int i = 0; i < 10; ++i) busy.record(0.5);
    const double expected = 0.5 + std::sqrt(2.0 * std::log(100.0) / 10.0);
    CHECK(uct_score(100, busy, 1.0) == doctest::Approx(expected));
    CHECK(uct_score(100, busy, 1.0) == doctest::Approx(1.4597052656));

    // C = 0 collapses to the empirical mean for any visit counts.
    CHECK(uct_score(100, busy, 0.0) == doctest::Approx(0.5));
    CHECK(uct_score(7, child, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("uct score rejects unvisited inputs") {
    NodeStats fresh;
    CHECK_THROWS_AS(uct_score(10, fresh, 1.0), contract_violation);
    NodeStats visited;
    visited.record(1.0);
    CHECK_THROWS_AS(uct_score(0, visited, 1.0), contract_violation);
}

TEST_CASE("exploration term is monotone in child visits") {
    // At equal parent visits the most-visited child has the smallest bonus.
    CHECK(uct_exploration_term(500, 400, 1.0) < uct_exploration_term(500, 20, 1.0));
    CHECK(uct_exploration_term(1, 1, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("node statistics track sum, max and mean") {
    NodeStats stats;
    stats.record(1.0);
    stats.record(3.0);
    stats.record(-1.0);
    CHECK(stats.visit_count == 3);
    CHECK(stats.cumulative_reward == doctest::Approx(3.0));
    CHECK(stats.max_reward == doctest::Approx(3.0));
    CHECK(stats.mean_reward() == doctest::Approx(1.0));
    CHECK(stats.mean_reward() <= stats.max_reward);
}

TEST_CASE("backpropagation discounts per tree level") {
    const GridWorldMdp mdp;
    SolverConfig config;
    config.reward_discount_factor = 0.9;
    GenericSolver<GridState, GridAction> solver(mdp, config);

    auto& a = solver.root().add_child(GridAction::left);
    auto& b = a.add_child(GridAction::left);
    solver.backpropagate(b, 1.0);

    CHECK(b.stats.cumulative_reward == doctest::Approx(1.0));
    CHECK(a.stats.cumulative_reward == doctest::Approx(0.9));
    CHECK(solver.root().stats.cumulative_reward == doctest::Approx(0.81));
    CHECK(solver.root().stats.visit_count == 1);

    SUBCASE("discount 1 passes the same reward to every ancestor") {
        SolverConfig undiscounted;
        undiscounted.reward_discount_factor = 1.0;
        GenericSolver<GridState, GridAction> flat(mdp, undiscounted);
        auto& x = flat.root().add_child(GridAction::up);
        auto& y = x.add_child(GridAction::up);
        flat.backpropagate(y, 2.5);
        CHECK(y.stats.cumulative_reward == doctest::Approx(2.5));
        CHECK(x.stats.cumulative_reward == doctest::Approx(2.5));
        CHECK(flat.root().stats.cumulative_reward == doctest::Approx(2.5));
    }
}

TEST_CASE("solver config validation") {
    SolverConfig config;
    CHECK_NOTHROW(config.validate());
    SolverConfig bad_c = config;
    bad_c.exploration_constant = -0.1;
    CHECK_THROWS_AS(bad_c.validate(), config_error);
    SolverConfig bad_gamma = config;
    bad_gamma.reward_discount_factor = 0.0;
    CHECK_THROWS_AS(bad_gamma.validate(), config_error);
    bad_gamma.reward_discount_factor = 1.5;
    CHECK_THROWS_AS(bad_gamma.validate(), config_error);
    SolverConfig bad_depth = config;
    bad_depth.simulation_depth_limit = 0;
    CHECK_THROWS_AS(bad_depth.validate(), config_error);
    SolverConfig bad_budget = config;
    bad_budget.iteration_budget = 0;
    CHECK_THROWS_AS(bad_budget.validate(), config_error);
}
