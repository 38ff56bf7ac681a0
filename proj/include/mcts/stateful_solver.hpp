#pragma once

#include <limits>
#include <vector>

#include "mcts/solver.hpp"

namespace mcts {

/**
 * @brief The explicit-state solver: every node permanently stores its sampled
 * state together with the cached legal-action set and terminal flag.
 *
 * Selection walks stored states and never re-runs transitions for known
 * nodes, trading memory for speed. Preferred when the state-action-state
 * branching factor is small — deterministic games in particular, where each
 * (state, action) pair has exactly one successor.
 *
 * Children are keyed by (action, state): when a fully explored node's best
 * action produces a state no child holds yet (stochastic domains), that child
 * is created during selection and handed to expansion.
 */
template <typename StateT, typename ActionT>
class StatefulSolver : public Solver<StateT, ActionT, StateNode<StateT, ActionT>> {
public:
    using Node = StateNode<StateT, ActionT>;
    using Base = Solver<StateT, ActionT, Node>;
    using Mdp = typename Base::Mdp;

    StatefulSolver(const Mdp& mdp, SolverConfig config) : Base(mdp, config) {
        StateT state = mdp.initial_state();
        const bool terminal = mdp.is_terminal(state);
        std::vector<ActionT> valid = terminal ? std::vector<ActionT>{} : mdp.actions(state);
        root_ = Node::make_root(std::move(state), std::move(valid), terminal);
    }

    /// Descends while the current node is fully explored: picks the best
    /// action by per-action UCT, samples a transition, and either recurses
    /// into the existing child matching (action, state) or creates that child
    /// and returns it. Terminal or not-fully-explored nodes are returned
    /// directly.
    Node& select(Node& node) override {
        Node* current = &node;
        while (true) {
            if (current->terminal || current->valid_actions.empty()) return *current;
            if (!current->fully_explored()) return *current;
            const ActionT& best = best_explored_action(*current);
            StateT next = mdp_.transition(current->state, best, rng_);
            if (Node* existing = current->find_child(best, next)) {
                current = existing;
                continue;
            }
            return create_child(*current, best, std::move(next));
        }
    }

    /// Chooses an unexplored action uniformly at random, samples its
    /// transition and creates the child, caching the child's action set and
    /// terminal flag. Terminal input is returned unchanged.
    Node& expand(Node& node) override {
        if (node.terminal || node.valid_actions.empty()) return node;
        std::size_t remaining = node.valid_actions.size() - node.explored_count();
        if (remaining == 0)
            throw contract_violation("expand: node is already fully explored");
        std::size_t pick = uniform_index(remaining, rng_);
        std::size_t index = 0;
        for (; index < node.valid_actions.size(); ++index) {
            if (node.explored[index]) continue;
            if (pick == 0) break;
            --pick;
        }
        node.explored[index] = true;
        StateT next = mdp_.transition(node.state, node.valid_actions[index], rng_);
        return create_child(node, node.valid_actions[index], std::move(next));
    }

    double simulate(Node& node) override {
        const StateT* parent_state = node.parent ? &node.parent->state : nullptr;
        const ActionT* inducing = node.inducing_action ? &*node.inducing_action : nullptr;
        return this->rollout(node.state, parent_state, inducing, &node.valid_actions,
                             node.terminal);
    }

protected:
    using Base::config_;
    using Base::mdp_;
    using Base::rng_;
    using Base::root_;

    /// UCT argmax over the node's actions. Statistics of children that share
    /// an inducing action are pooled: n'_a is the sum of their visit counts
    /// and the mean is taken over the pooled rewards. Ties break toward the
    /// lower action enumeration index.
    const ActionT& best_explored_action(const Node& node) const {
        double best_score = -std::numeric_limits<double>::infinity();
        std::size_t best_index = node.valid_actions.size();
        for (std::size_t i = 0; i < node.valid_actions.size(); ++i) {
            std::uint64_t visits = 0;
            double cumulative = 0.0;
            for (const auto& child : node.children) {
                if (*child->inducing_action == node.valid_actions[i]) {
                    visits += child->stats.visit_count;
                    cumulative += child->stats.cumulative_reward;
                }
            }
            if (visits == 0) continue;
            const double score =
                cumulative / static_cast<double>(visits) +
                uct_exploration_term(node.stats.visit_count, visits, config_.exploration_constant);
            if (score > best_score) {
                best_score = score;
                best_index = i;
            }
        }
        if (best_index == node.valid_actions.size())
            throw contract_violation("select: fully explored node has no visited children");
        return node.valid_actions[best_index];
    }

    Node& create_child(Node& parent, const ActionT& action, StateT state) {
        const bool terminal = mdp_.is_terminal(state);
        std::vector<ActionT> valid = terminal ? std::vector<ActionT>{} : mdp_.actions(state);
        return parent.add_child(action, std::move(state), std::move(valid), terminal);
    }
};

}  // namespace mcts
