#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace mcts {

/// Visit statistics kept on every tree node: the visit count n, the sum of
/// backpropagated (discounted) rewards, and their running maximum. The mean
/// feeds UCT; the maximum is retained for extensions that prefer it.
struct NodeStats {
    std::uint64_t visit_count = 0;
    double cumulative_reward = 0.0;
    double max_reward = -std::numeric_limits<double>::infinity();

    /// Empirical mean reward; only meaningful when visit_count > 0.
    double mean_reward() const { return cumulative_reward / static_cast<double>(visit_count); }

    void record(double reward) {
        max_reward = std::max(max_reward, reward);
        cumulative_reward += reward;
        ++visit_count;
    }
};

/**
 * Node of the Generic (action-replay) solver. Only the inducing action is
 * stored permanently; the state is recomputed on demand by replaying the
 * action chain from the root. The replay_* members are a scratchpad that is
 * valid only for the pass stamped in `replay_pass` — in stochastic domains
 * every pass may resolve a different state for the same node.
 */
template <typename StateT, typename ActionT>
struct ActionNode {
    using State = StateT;
    using Action = ActionT;

    ActionNode* parent = nullptr;
    std::optional<Action> inducing_action;  // empty at the root
    std::uint32_t depth = 0;
    NodeStats stats;
    std::vector<std::unique_ptr<ActionNode>> children;

    // Replay scratchpad (see GenericSolver::replay_to).
    std::optional<State> replay_state;
    std::vector<Action> replay_actions;
    bool replay_terminal = false;
    std::uint64_t replay_pass = 0;

    ActionNode& add_child(Action action) {
        auto child = std::make_unique<ActionNode>();
        child->parent = this;
        child->inducing_action = std::move(action);
        child->depth = depth + 1;
        children.push_back(std::move(child));
        return *children.back();
    }

    const ActionNode* child_for(const Action& action) const {
        for (const auto& child : children)
            if (child->inducing_action && *child->inducing_action == action) return child.get();
        return nullptr;
    }

    ActionNode* child_for(const Action& action) {
        return const_cast<ActionNode*>(std::as_const(*this).child_for(action));
    }
};

/**
 * Node of the Stateful solver. The sampled state is stored permanently along
 * with the cached action set and terminal flag, so selection can walk the
 * tree without re-running the domain. Children are keyed by (inducing action,
 * state): under a stochastic transition one action may own several children.
 */
template <typename StateT, typename ActionT>
struct StateNode {
    using State = StateT;
    using Action = ActionT;

    StateNode* parent = nullptr;
    std::optional<Action> inducing_action;  // empty at the root
    std::uint32_t depth = 0;
    NodeStats stats;
    std::vector<std::unique_ptr<StateNode>> children;

    State state{};
    std::vector<Action> valid_actions;
    std::vector<bool> explored;  // parallel to valid_actions
    bool terminal = false;

    static std::unique_ptr<StateNode> make_root(State state, std::vector<Action> valid,
                                                bool terminal) {
        auto node = std::make_unique<StateNode>();
        node->state = std::move(state);
        node->valid_actions = std::move(valid);
        node->explored.assign(node->valid_actions.size(), false);
        node->terminal = terminal;
        return node;
    }

    StateNode& add_child(Action action, State child_state, std::vector<Action> child_valid,
                         bool child_terminal) {
        auto child = std::make_unique<StateNode>();
        child->parent = this;
        child->inducing_action = std::move(action);
        child->depth = depth + 1;
        child->state = std::move(child_state);
        child->valid_actions = std::move(child_valid);
        child->explored.assign(child->valid_actions.size(), false);
        child->terminal = child_terminal;
        children.push_back(std::move(child));
        return *children.back();
    }

    StateNode* find_child(const Action& action, const State& child_state) {
        for (const auto& child : children)
            if (*child->inducing_action == action && child->state == child_state)
                return child.get();
        return nullptr;
    }

    std::size_t explored_count() const {
        return static_cast<std::size_t>(std::count(explored.begin(), explored.end(), true));
    }

    bool fully_explored() const {
        return std::find(explored.begin(), explored.end(), false) == explored.end();
    }
};

}  // namespace mcts
