#pragma once

#include <limits>
#include <vector>

#include "mcts/domains/heuristic_weights.hpp"
#include "mcts/domains/reversi.hpp"
#include "mcts/stateful_solver.hpp"

namespace mcts::domains {

/**
 * Stateful Reversi solver whose simulation phase is biased by a positional
 * weight table: at every rollout step each legal placement is rated by its
 * square's weight, and the move is drawn uniformly from the set of maximal-
 * weight actions. Both players' rollout moves go through the table, so the
 * bias shapes the whole playout, not just the agent's side. A pass is only
 * ever offered when forced, in which case it is taken regardless of weights.
 * Everything else — selection, expansion, backpropagation — is inherited.
 */
class ReversiHeuristicSolver final : public StatefulSolver<ReversiState, ReversiAction> {
public:
    using Base = StatefulSolver<ReversiState, ReversiAction>;

    ReversiHeuristicSolver(const ReversiMdp& mdp, SolverConfig config,
                           HeuristicWeightTable table = HeuristicWeightTable::classic())
        : Base(mdp, config), table_(table) {}

    const HeuristicWeightTable& table() const { return table_; }

    /// The rollout move rule, exposed for direct testing: uniform draw from
    /// the argmax-weight set of the legal actions.
    ReversiAction choose_rollout_action(const ReversiState& state,
                                        const std::vector<ReversiAction>& valid_actions,
                                        Rng& rng) override {
        (void)state;
        if (valid_actions.size() == 1) return valid_actions.front();
        int best_score = std::numeric_limits<int>::min();
        best_actions_.clear();
        for (const auto& action : valid_actions) {
            if (action.is_pass()) continue;  // never preferred over a placement
            const int score = table_.weight(action.x, action.y);
            if (score > best_score) {
                best_score = score;
                best_actions_.clear();
                best_actions_.push_back(action);
            } else if (score == best_score) {
                best_actions_.push_back(action);
            }
        }
        return best_actions_[uniform_index(best_actions_.size(), rng)];
    }

private:
    HeuristicWeightTable table_;
    std::vector<ReversiAction> best_actions_;  // scratch; solver is single-threaded
};

}  // namespace mcts::domains
