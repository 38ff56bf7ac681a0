#include <array>
#include <cmath>

#include "doctest.h"
#include "mcts/domains/grid_world.hpp"
#include "mcts/domains/push_your_luck.hpp"
#include "mcts/generic_solver.hpp"
#include "support/tree_checks.hpp"

using namespace mcts;
using namespace mcts::domains;
using mcts_tests::check_tree_invariants;
using mcts_tests::tree_signature;

namespace {

// Replay divergence fixture: from the hub, "hop" lands on either branch with
// equal probability, and each branch offers a different sole action.
enum class SlipAction { hop, settle_a, settle_b, finish };
struct SlipState {
    int id = 0;  // 0 hub, 1 branch a, 2 branch b, 3 terminal
    bool operator==(const SlipState&) const = default;
};

struct SlipDomain final : MarkovDecisionProcess<SlipState, SlipAction> {
    SlipState transition(const SlipState& state, const SlipAction& action,
                         Rng& rng) const override {
        if (state.id == 0 && action == SlipAction::hop)
            return {uniform_unit(rng) < 0.5 ? 1 : 2};
        if (state.id == 1 && action == SlipAction::settle_a) return {3};
        if (state.id == 2 && action == SlipAction::settle_b) return {3};
        throw contract_violation("slip: illegal action");
    }
    double reward(const SlipState*, const SlipAction*, const SlipState& state) const override {
        return state.id == 3 ? 1.0 : 0.0;
    }
    SlipState initial_state() const override { return {0}; }
    bool is_terminal(const SlipState& state) const override { return state.id == 3; }
    std::vector<SlipAction> actions(const SlipState& state) const override {
        switch (state.id) {
            case 0: return {SlipAction::hop};
            case 1: return {SlipAction::settle_a};
            case 2: return {SlipAction::settle_b};
            default: return {};
        }
    }
};

}  // namespace

TEST_CASE("selection returns a childless root") {
    const GridWorldMdp mdp;
    GenericSolver<GridState, GridAction> solver(mdp, {});
    auto& picked = solver.select(solver.root());
    CHECK(&picked == &solver.root());
    CHECK(picked.replay_state.has_value());
    CHECK(*picked.replay_state == GridState{3, 2});
}

TEST_CASE("selection descends into the child with the larger UCT") {
    const PushYourLuckMdp mdp;
    GenericSolver<PylState, PylAction> solver(mdp, {});

    // Root fully explored: two children, equal means, visit counts 50 vs 10.
    auto& roll_child = solver.root().add_child(PylAction::roll);
    auto& stop_child = solver.root().add_child(PylAction::stop);
    roll_child.stats = {50, 25.0, 0.5};
    stop_child.stats = {10, 5.0, 0.5};
    solver.root().stats = {60, 30.0, 0.5};

    // Equal means leave the exploration terms to decide: n' = 10 wins.
    CHECK(uct_score(60, stop_child.stats, 1.0) > uct_score(60, roll_child.stats, 1.0));
    auto& picked = solver.select(solver.root());
    CHECK(&picked == &stop_child);
    CHECK(picked.replay_state.has_value());
}

TEST_CASE("selection stops at a node with unexplored actions") {
    const GridWorldMdp mdp;
    GenericSolver<GridState, GridAction> solver(mdp, {});
    auto& left = solver.root().add_child(GridAction::left);
    auto& up = solver.root().add_child(GridAction::up);
    left.stats = {1, 0.5, 0.5};
    up.stats = {1, 0.4, 0.4};
    solver.root().stats = {2, 0.9, 0.5};

    // 2 of 4 actions explored: the root itself goes to expansion.
    auto& picked = solver.select(solver.root());
    CHECK(&picked == &solver.root());
}

TEST_CASE("expansion adds exactly one child for an unexplored action") {
    const GridWorldMdp mdp;
    GenericSolver<GridState, GridAction> solver(mdp, {});
    auto& selected = solver.select(solver.root());
    auto& child = solver.expand(selected);
    CHECK(&child != &solver.root());
    CHECK(solver.root().children.size() == 1);
    CHECK(child.stats.visit_count == 0);
    CHECK(child.stats.cumulative_reward == doctest::Approx(0.0));
    CHECK_FALSE(child.replay_state.has_value());
    CHECK(child.depth == 1);
}

TEST_CASE("expanding a terminal node returns it unchanged") {
    const PushYourLuckMdp mdp;
    GenericSolver<PylState, PylAction> solver(mdp, {});
    auto& stop_child = solver.root().add_child(PylAction::stop);
    solver.select(solver.root());  // fresh pass; root replayed
    auto& expanded = solver.expand(stop_child);
    CHECK(&expanded == &stop_child);  // replayed state is terminal
    CHECK(stop_child.children.empty());
}

TEST_CASE("expanding a fully explored node is a contract violation") {
    const GridWorldMdp mdp;
    GenericSolver<GridState, GridAction> solver(mdp, {});
    for (GridAction a : {GridAction::left, GridAction::up, GridAction::right, GridAction::down})
        solver.root().add_child(a);
    CHECK_THROWS_AS(solver.expand(solver.root()), contract_violation);
}

TEST_CASE("expansion picks uniformly among unexplored actions") {
    std::array<int, 4> counts{};
    for (int i = 0; i < 4000; ++i) {
        const GridWorldMdp mdp;
        SolverConfig config;
        config.rng_seed = 1000 + i;
        GenericSolver<GridState, GridAction> solver(mdp, config);
        auto& child = solver.expand(solver.select(solver.root()));
        ++counts[static_cast<int>(*child.inducing_action)];
    }
    double chi_square = 0.0;
    for (int c : counts) {
        CHECK(c > 900);
        CHECK(c < 1100);
        chi_square += (c - 1000.0) * (c - 1000.0) / 1000.0;
    }
    CHECK(chi_square < 16.27);  // chi-square 0.999 quantile, 3 dof
}

TEST_CASE("replay resolves the inducing-action chain from the initial state") {
    const GridWorldMdp mdp({}, 0.0);
    GenericSolver<GridState, GridAction> solver(mdp, {});
    CHECK(solver.replay_to(solver.root()) == GridState{3, 2});

    auto& first = solver.root().add_child(GridAction::left);
    auto& second = first.add_child(GridAction::left);
    CHECK(solver.replay_to(second) == GridState{1, 2});
    CHECK(*first.replay_state == GridState{2, 2});
}

TEST_CASE("replay resamples stochastic transitions across passes") {
    const GridWorldMdp mdp({}, 0.2);
    SolverConfig config;
    config.rng_seed = 31;
    GenericSolver<GridState, GridAction> solver(mdp, config);
    auto& child = solver.root().add_child(GridAction::left);

    int intended = 0;
    const int passes = 10000;
    for (int i = 0; i < passes; ++i) {
        solver.new_replay_pass();
        if (solver.replay_to(child) == GridState{2, 2}) ++intended;
    }
    CHECK(std::abs(intended / double(passes) - 0.8) < 0.02);

    SUBCASE("within one pass the state is stable") {
        solver.new_replay_pass();
        const GridState once = solver.replay_to(child);
        for (int i = 0; i < 10; ++i) CHECK(solver.replay_to(child) == once);
    }
}

TEST_CASE("replay divergence aborts the iteration and is counted") {
    const SlipDomain mdp;
    SolverConfig config;
    config.rng_seed = 7;
    config.iteration_budget = 200;
    GenericSolver<SlipState, SlipAction> solver(mdp, config);
    solver.run_tree_search(200);

    // The hub's child replays to branch a or b at random; its grandchild's
    // stored action diverges roughly half the time.
    CHECK(solver.aborted_iterations() > 0);
    CHECK(solver.root().stats.visit_count + solver.aborted_iterations() == 200);
    check_tree_invariants(solver.root());
}

TEST_CASE("simulating a terminal node returns its reward undiscounted") {
    GridWorldLayout layout;
    layout.start = {1, 0};
    const GridWorldMdp mdp(layout, 0.0);
    GenericSolver<GridState, GridAction> solver(mdp, {});
    auto& child = solver.root().add_child(GridAction::left);  // lands on +5
    solver.new_replay_pass();
    CHECK(solver.simulate(child) == doctest::Approx(5.0));
}

TEST_CASE("one-step rollout into a terminal state is discounted once") {
    GridWorldLayout layout;
    layout.start = {1, 0};
    const GridWorldMdp mdp(layout, 0.0);

    // Find a seed whose first rollout draw picks `left` (index 0 of 4).
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        Rng probe(seed);
        if (uniform_index(4, probe) != 0) continue;
        SolverConfig config;
        config.rng_seed = seed;
        config.reward_discount_factor = 0.9;
        GenericSolver<GridState, GridAction> solver(mdp, config);
        CHECK(solver.simulate(solver.root()) == doctest::Approx(5.0 * 0.9));
        return;
    }
    FAIL("no suitable seed found");
}

TEST_CASE("tree search runs the full loop and keeps the accounting straight") {
    const GridWorldMdp mdp;
    SolverConfig config;
    config.rng_seed = 5;
    GenericSolver<GridState, GridAction> solver(mdp, config);

    solver.run_tree_search(0);
    CHECK(solver.root().stats.visit_count == 0);
    CHECK(solver.root().children.empty());

    solver.run_tree_search(500);
    CHECK(solver.root().stats.visit_count == 500);
    CHECK(solver.root().children.size() == 4);
    check_tree_invariants(solver.root());
}

TEST_CASE("seeded runs on a deterministic domain build identical trees") {
    const GridWorldMdp mdp({}, 0.0);
    SolverConfig config;
    config.rng_seed = 77;
    config.iteration_budget = 500;

    GenericSolver<GridState, GridAction> first(mdp, config);
    first.run_tree_search();
    GenericSolver<GridState, GridAction> second(mdp, config);
    second.run_tree_search();
    CHECK(tree_signature(first.root()) == tree_signature(second.root()));
}

TEST_CASE("best action: ties break toward the lower enumeration index") {
    const GridWorldMdp mdp;
    GenericSolver<GridState, GridAction> solver(mdp, {});
    CHECK_THROWS_AS(solver.best_action(), no_decision_error);

    auto& left = solver.root().add_child(GridAction::left);
    auto& up = solver.root().add_child(GridAction::up);
    auto& right = solver.root().add_child(GridAction::right);
    auto& down = solver.root().add_child(GridAction::down);
    left.stats = {10, 42.0, 5.0};
    up.stats = {10, -3.0, 0.0};
    right.stats = {10, 1.0, 0.5};
    down.stats = {10, 42.0, 5.0};
    solver.root().stats = {40, 82.0, 5.0};

    CHECK(solver.best_action() == GridAction::left);  // tie with down

    SUBCASE("single child returns its action") {
        GenericSolver<GridState, GridAction> lone(mdp, {});
        auto& only = lone.root().add_child(GridAction::up);
        only.stats = {1, 0.0, 0.0};
        lone.root().stats = {1, 0.0, 0.0};
        CHECK(lone.best_action() == GridAction::up);
    }

    SUBCASE("by-visit-count policy is available behind the config switch") {
        SolverConfig by_visits;
        by_visits.best_action_policy = BestActionPolicy::most_visits;
        GenericSolver<GridState, GridAction> counter(mdp, by_visits);
        auto& a = counter.root().add_child(GridAction::up);
        auto& b = counter.root().add_child(GridAction::right);
        a.stats = {30, 3.0, 0.5};   // more visits, lower mean
        b.stats = {10, 9.0, 1.0};
        counter.root().stats = {40, 12.0, 1.0};
        CHECK(counter.best_action() == GridAction::up);
    }
}

TEST_CASE("root child statistics: first iteration has one row, term 0") {
    const GridWorldMdp mdp;
    SolverConfig config;
    config.rng_seed = 9;
    GenericSolver<GridState, GridAction> solver(mdp, config);
    CHECK_THROWS_AS(solver.root_child_statistics(), contract_violation);

    solver.run_tree_search(1);
    const auto stats = solver.root_child_statistics();
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].exploration_term == doctest::Approx(0.0));  // ln 1 = 0
    CHECK(stats[0].visit_count == 1);

    solver.run_tree_search(499);
    const auto later = solver.root_child_statistics();
    REQUIRE(later.size() == 4);
    std::uint64_t total = 0;
    for (const auto& row : later) total += row.visit_count;
    CHECK(total == 500);
    // More-visited children carry smaller exploration terms.
    for (const auto& a : later)
        for (const auto& b : later)
            if (a.visit_count > b.visit_count) CHECK(a.exploration_term <= b.exploration_term);
}
