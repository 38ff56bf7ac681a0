#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <vector>

#include "mcts/solver.hpp"

namespace mcts {

/**
 * @brief The action-replay solver: tree nodes store only inducing actions.
 *
 * States are never persisted. Whenever selection walks the tree it re-runs
 * the domain's transitions along the inducing-action chain, so in stochastic
 * domains every pass may resolve a different state for the same node — which
 * is the point: memory stays proportional to the action tree no matter how
 * large the state-action-state branching factor is, at the cost of replaying
 * transitions. Prefer this variant when one action can lead to many states.
 *
 * Replayed states are cached within a pass (select starts a new pass) and
 * recomputed across passes. If a replayed state makes a stored inducing
 * action illegal, replay_to throws replay_divergence and the driver drops
 * that iteration.
 */
template <typename StateT, typename ActionT>
class GenericSolver : public Solver<StateT, ActionT, ActionNode<StateT, ActionT>> {
public:
    using Node = ActionNode<StateT, ActionT>;
    using Base = Solver<StateT, ActionT, Node>;
    using Mdp = typename Base::Mdp;

    GenericSolver(const Mdp& mdp, SolverConfig config) : Base(mdp, config) {
        root_ = std::make_unique<Node>();
    }

    /// Replays the root, then descends through fully explored nodes along the
    /// maximum-UCT child, replaying one transition per step. Returns the
    /// first node that is terminal or still has unexplored actions. Score
    /// ties break by action enumeration order, not child creation order.
    Node& select(Node& node) override {
        new_replay_pass();
        replay_to(node);
        Node* current = &node;
        while (true) {
            if (current->replay_terminal || current->replay_actions.empty()) return *current;
            if (!fully_explored(*current)) return *current;
            Node* best = nullptr;
            double best_score = -std::numeric_limits<double>::infinity();
            auto consider = [&](Node* child) {
                const double score = uct_score(current->stats.visit_count, child->stats,
                                               config_.exploration_constant);
                if (score > best_score) {
                    best_score = score;
                    best = child;
                }
            };
            for (const auto& action : current->replay_actions)
                consider(current->child_for(action));
            // Children whose action fell out of the current action set
            // (stochastic domains) are still candidates, after the others.
            for (const auto& child : current->children) {
                const auto& known = current->replay_actions;
                if (std::find(known.begin(), known.end(), *child->inducing_action) ==
                    known.end())
                    consider(child.get());
            }
            replay_to(*best);  // may throw replay_divergence in stochastic domains
            current = best;
        }
    }

    /// Creates one child for an unexplored action chosen uniformly at random.
    /// The child carries only the action; its state is resolved later by
    /// replay. Terminal input is returned unchanged.
    Node& expand(Node& node) override {
        replay_to(node);
        if (node.replay_terminal || node.replay_actions.empty()) return node;
        std::vector<const ActionT*> unexplored;
        for (const auto& action : node.replay_actions)
            if (node.child_for(action) == nullptr) unexplored.push_back(&action);
        if (unexplored.empty())
            throw contract_violation("expand: node is already fully explored");
        return node.add_child(*unexplored[uniform_index(unexplored.size(), rng_)]);
    }

    double simulate(Node& node) override {
        const StateT& state = replay_to(node);
        const StateT* parent_state = node.parent ? &*node.parent->replay_state : nullptr;
        const ActionT* inducing = node.inducing_action ? &*node.inducing_action : nullptr;
        return this->rollout(state, parent_state, inducing, &node.replay_actions,
                             node.replay_terminal);
    }

    /// Resolves the transient state of `node` by replaying inducing actions
    /// from initial_state(), storing the sampled state (plus its action set
    /// and terminal flag) in every node along the chain. Within one pass the
    /// chain is sampled exactly once; new_replay_pass() invalidates it.
    const StateT& replay_to(Node& node) {
        if (node.replay_pass == replay_pass_ && node.replay_state) return *node.replay_state;
        if (node.parent == nullptr) {
            set_replay(node, mdp_.initial_state());
        } else {
            const StateT& parent_state = replay_to(*node.parent);
            const auto& legal = node.parent->replay_actions;
            if (std::find(legal.begin(), legal.end(), *node.inducing_action) == legal.end())
                throw replay_divergence(
                    "replay_to: stored inducing action is illegal in the replayed parent state");
            set_replay(node, mdp_.transition(parent_state, *node.inducing_action, rng_));
        }
        return *node.replay_state;
    }

    /// Starts a new replay pass: transient states resolved before this call
    /// will be recomputed on the next replay_to. select() calls this once per
    /// invocation.
    void new_replay_pass() { ++replay_pass_; }

    std::uint64_t replay_pass() const { return replay_pass_; }

    bool fully_explored(const Node& node) const {
        for (const auto& action : node.replay_actions)
            if (node.child_for(action) == nullptr) return false;
        return true;
    }

protected:
    using Base::config_;
    using Base::mdp_;
    using Base::rng_;
    using Base::root_;

private:
    void set_replay(Node& node, StateT state) {
        node.replay_terminal = mdp_.is_terminal(state);
        node.replay_actions =
            node.replay_terminal ? std::vector<ActionT>{} : mdp_.actions(state);
        node.replay_state = std::move(state);
        node.replay_pass = replay_pass_;
    }

    std::uint64_t replay_pass_ = 1;  // 0 marks never-replayed nodes
};

}  // namespace mcts
