#pragma once

#include <cstdint>

#include "mcts/errors.hpp"

namespace mcts {

/// How best_action() ranks the root's actions.
enum class BestActionPolicy {
    highest_mean_reward,  // default: empirical mean of backpropagated rewards
    most_visits,
};

/// Knobs shared by every solver. Aggregate-initializable; range constraints
/// are checked by validate(), which every solver calls on construction.
struct SolverConfig {
    double exploration_constant = 1.0;    // C in the UCT bonus; >= 0
    double reward_discount_factor = 0.9;  // gamma, in (0, 1]
    std::uint32_t simulation_depth_limit = 1000;
    std::uint32_t iteration_budget = 500;
    std::uint64_t rng_seed = 0;
    bool verbose = false;
    BestActionPolicy best_action_policy = BestActionPolicy::highest_mean_reward;

    void validate() const {
        if (!(exploration_constant >= 0.0))
            throw config_error("SolverConfig: exploration_constant must be >= 0");
        if (!(reward_discount_factor > 0.0) || !(reward_discount_factor <= 1.0))
            throw config_error("SolverConfig: reward_discount_factor must lie in (0, 1]");
        if (simulation_depth_limit == 0)
            throw config_error("SolverConfig: simulation_depth_limit must be positive");
        if (iteration_budget == 0)
            throw config_error("SolverConfig: iteration_budget must be positive");
    }
};

}  // namespace mcts
