#pragma once

#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "mcts/errors.hpp"
#include "mcts/mdp.hpp"
#include "mcts/node.hpp"
#include "mcts/rng.hpp"
#include "mcts/solver_config.hpp"

namespace mcts {

/// Exploration bonus of the UCT rule: C * sqrt(2 ln n / n'), where n is the
/// parent's visit count and n' the child's.
inline double uct_exploration_term(std::uint64_t parent_visits, std::uint64_t child_visits,
                                   double exploration_constant) {
    return exploration_constant *
           std::sqrt(2.0 * std::log(static_cast<double>(parent_visits)) /
                     static_cast<double>(child_visits));
}

/// Full UCT score of a visited child: empirical mean plus exploration bonus.
/// Unvisited children are never scored — selection hands nodes with
/// unexplored actions straight to expansion, so n' >= 1 always holds here.
inline double uct_score(std::uint64_t parent_visits, const NodeStats& child,
                        double exploration_constant) {
    if (parent_visits == 0)
        throw contract_violation("uct_score: parent visit count must be positive");
    if (child.visit_count == 0)
        throw contract_violation("uct_score: child has never been visited");
    return child.mean_reward() +
           uct_exploration_term(parent_visits, child.visit_count, exploration_constant);
}

/// Per-action statistics of the root's explored children, in the root's
/// action enumeration order. Children sharing an inducing action (stochastic
/// stateful trees) are pooled.
template <typename ActionT>
struct ActionStatistics {
    ActionT action;
    double exploration_term;  // C * sqrt(2 ln n / n')
    double mean_reward;
    std::uint64_t visit_count;
};

/**
 * @brief Base of every tree-search solver: the four overridable phases plus
 * the iteration driver.
 *
 * One iteration runs Selection -> Expansion -> Simulation -> Backpropagation.
 * Each phase is virtual, as is run_tree_search() itself, so subclasses can
 * swap any mechanism (a heuristic simulation policy, a different phase order,
 * per-iteration metric capture, ...) while inheriting the rest.
 *
 * A solver instance is single-threaded: one tree, one RNG stream, no internal
 * locking. Run several instances over the same (immutable) domain to use
 * multiple cores.
 */
template <typename StateT, typename ActionT, typename NodeT>
class Solver {
public:
    using State = StateT;
    using Action = ActionT;
    using Node = NodeT;
    using Mdp = MarkovDecisionProcess<StateT, ActionT>;

    Solver(const Mdp& mdp, SolverConfig config)
        : mdp_(mdp), config_(config), rng_(config.rng_seed),
          root_actions_(mdp.actions(mdp.initial_state())) {
        config_.validate();
    }

    virtual ~Solver() = default;
    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    // The four phases. select/expand/simulate differ per variant;
    // backpropagation is shared.
    virtual NodeT& select(NodeT& node) = 0;
    virtual NodeT& expand(NodeT& node) = 0;
    virtual double simulate(NodeT& node) = 0;

    /// Walks from `node` to the root adding `reward` into each node's
    /// statistics, discounting by gamma per tree level: the simulated node
    /// sees the raw value, its parent reward * gamma, and so on.
    virtual void backpropagate(NodeT& node, double reward) {
        NodeT* current = &node;
        double current_reward = reward;
        while (current != nullptr) {
            current->stats.record(current_reward);
            current = current->parent;
            current_reward *= config_.reward_discount_factor;
        }
    }

    /// Default driver: `iterations` rounds of select -> expand -> simulate ->
    /// backpropagate on the current tree (which may already be partially
    /// built). A replay divergence aborts only its own iteration; such
    /// iterations are no-ops and do not contribute to root visits.
    virtual void run_tree_search(std::uint32_t iterations) {
        for (std::uint32_t i = 0; i < iterations; ++i) {
            try {
                NodeT& selected = select(*root_);
                NodeT& expanded = expand(selected);
                const double reward = simulate(expanded);
                backpropagate(expanded, reward);
            } catch (const replay_divergence&) {
                ++aborted_iterations_;
            }
        }
        if (config_.verbose) log_root_summary();
    }

    /// Runs the configured iteration budget.
    void run_tree_search() { run_tree_search(config_.iteration_budget); }

    /// The recommended action at the root: highest empirical mean reward (or
    /// most visits, per config), ties broken by lowest action enumeration
    /// index. Statistics of children sharing an action are pooled.
    ActionT best_action() const {
        const auto stats = root_child_statistics_internal();
        if (stats.empty())
            throw no_decision_error("best_action: the root has no explored children");
        const Aggregate* best = &stats.front();
        for (const auto& agg : stats) {
            const bool better = config_.best_action_policy == BestActionPolicy::most_visits
                                    ? agg.visits > best->visits
                                    : agg.mean() > best->mean();
            if (better) best = &agg;
        }
        return root_actions_[best->action_index];
    }

    /// Per explored root action: exploration term, mean reward and cumulative
    /// visits — the per-iteration convergence metrics of the bench harness.
    std::vector<ActionStatistics<ActionT>> root_child_statistics() const {
        if (root_->stats.visit_count == 0)
            throw contract_violation("root_child_statistics: the root has never been visited");
        std::vector<ActionStatistics<ActionT>> out;
        for (const auto& agg : root_child_statistics_internal()) {
            out.push_back({root_actions_[agg.action_index],
                           uct_exploration_term(root_->stats.visit_count, agg.visits,
                                                config_.exploration_constant),
                           agg.mean(), agg.visits});
        }
        return out;
    }

    NodeT& root() { return *root_; }
    const NodeT& root() const { return *root_; }
    const Mdp& mdp() const { return mdp_; }
    const SolverConfig& config() const { return config_; }
    Rng& rng() { return rng_; }

    /// Legal actions at the root, in enumeration order.
    const std::vector<ActionT>& root_actions() const { return root_actions_; }

    /// Iterations dropped due to replay divergence (Generic, stochastic
    /// domains only); diagnostic.
    std::uint64_t aborted_iterations() const { return aborted_iterations_; }

protected:
    /// Simulation-phase action choice; uniformly random by default. Override
    /// to bias rollouts with domain knowledge.
    virtual ActionT choose_rollout_action(const StateT& state,
                                          const std::vector<ActionT>& valid_actions, Rng& rng) {
        (void)state;
        return valid_actions[uniform_index(valid_actions.size(), rng)];
    }

    /// Shared simulation core. An (effectively) terminal input is evaluated
    /// in place, undiscounted. Otherwise a rollout runs until a terminal
    /// state or the depth limit; the discount starts at gamma before the
    /// first step, so a 1-step terminal rollout returns reward * gamma.
    /// `known_valid`/`known_terminal` pass along cached node metadata.
    double rollout(const StateT& state, const StateT* parent_state,
                   const ActionT* inducing_action,
                   const std::vector<ActionT>* known_valid = nullptr,
                   std::optional<bool> known_terminal = std::nullopt) {
        const bool terminal = known_terminal ? *known_terminal : mdp_.is_terminal(state);
        if (terminal) return mdp_.reward(parent_state, inducing_action, state);

        std::vector<ActionT> valid = known_valid ? *known_valid : mdp_.actions(state);
        if (valid.empty())  // no legal continuation: treat as terminal
            return mdp_.reward(parent_state, inducing_action, state);

        StateT current = state;
        std::uint32_t depth = 0;
        double discount = config_.reward_discount_factor;
        while (true) {
            const ActionT action = choose_rollout_action(current, valid, rng_);
            StateT next = mdp_.transition(current, action, rng_);
            bool next_terminal = mdp_.is_terminal(next);
            std::vector<ActionT> next_valid;
            if (!next_terminal) {
                next_valid = mdp_.actions(next);
                next_terminal = next_valid.empty();
            }
            if (next_terminal) return mdp_.reward(&current, &action, next) * discount;
            ++depth;
            discount *= config_.reward_discount_factor;
            if (depth > config_.simulation_depth_limit)
                return mdp_.reward(&current, &action, next) * discount;
            current = std::move(next);
            valid = std::move(next_valid);
        }
    }

    const Mdp& mdp_;
    SolverConfig config_;
    Rng rng_;
    std::unique_ptr<NodeT> root_;
    std::vector<ActionT> root_actions_;
    std::uint64_t aborted_iterations_ = 0;

private:
    struct Aggregate {
        std::size_t action_index;
        std::uint64_t visits;
        double cumulative_reward;
        double mean() const { return cumulative_reward / static_cast<double>(visits); }
    };

    std::vector<Aggregate> root_child_statistics_internal() const {
        std::vector<Aggregate> out;
        for (std::size_t i = 0; i < root_actions_.size(); ++i) {
            std::uint64_t visits = 0;
            double cumulative = 0.0;
            for (const auto& child : root_->children) {
                if (child->inducing_action && *child->inducing_action == root_actions_[i]) {
                    visits += child->stats.visit_count;
                    cumulative += child->stats.cumulative_reward;
                }
            }
            if (visits > 0) out.push_back({i, visits, cumulative});
        }
        return out;
    }

    void log_root_summary() const {
        std::clog << "tree search: root visits=" << root_->stats.visit_count
                  << " children=" << root_->children.size()
                  << " aborted=" << aborted_iterations_ << '\n';
        if (root_->stats.visit_count == 0) return;
        const auto stats = root_child_statistics();
        for (std::size_t i = 0; i < stats.size(); ++i) {
            std::clog << "  action[" << i << "] mean=" << stats[i].mean_reward
                      << " visits=" << stats[i].visit_count
                      << " exploration=" << stats[i].exploration_term << '\n';
        }
    }
};

}  // namespace mcts
