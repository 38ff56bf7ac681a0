#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mcts/errors.hpp"

namespace mcts::oracle {

/// One weighted successor of a (state, action) pair.
struct Outcome {
    std::int32_t next_state = 0;
    double probability = 0.0;
};

/// An action available in a state: its id, expected immediate reward
/// r(s, a) = sum_{s'} p(s'|s,a) * reward(s, a, s'), and the successor
/// distribution.
struct ActionEntry {
    std::int32_t action = 0;
    double expected_reward = 0.0;
    std::vector<Outcome> outcomes;
};

/**
 * Explicit, finite transition model: the home of the probability space that
 * generative domains only expose through sampling. Small enough domains can
 * be written down here and solved exactly, giving ground truth for the
 * sampling-based solvers.
 */
class TransitionModel {
public:
    explicit TransitionModel(std::size_t state_count)
        : entries_(state_count), terminal_(state_count, 0) {}

    std::size_t state_count() const { return entries_.size(); }

    void set_terminal(std::int32_t state) { terminal_[index(state)] = 1; }
    bool terminal(std::int32_t state) const { return terminal_[index(state)] != 0; }

    ActionEntry& add_action(std::int32_t state, std::int32_t action, double expected_reward) {
        entries_[index(state)].push_back({action, expected_reward, {}});
        return entries_[index(state)].back();
    }

    const std::vector<ActionEntry>& actions(std::int32_t state) const {
        return entries_[index(state)];
    }

    /// Per (state, action): probabilities sum to 1 within `tolerance`;
    /// terminal states carry no outgoing mass.
    void validate(double tolerance = 1e-9) const {
        for (std::size_t s = 0; s < entries_.size(); ++s) {
            if (terminal_[s] && !entries_[s].empty())
                throw config_error("TransitionModel: terminal state " + std::to_string(s) +
                                   " has outgoing actions");
            for (const auto& entry : entries_[s]) {
                double mass = 0.0;
                for (const auto& outcome : entry.outcomes) {
                    if (outcome.probability < 0.0)
                        throw config_error("TransitionModel: negative probability");
                    if (outcome.next_state < 0 ||
                        static_cast<std::size_t>(outcome.next_state) >= entries_.size())
                        throw config_error("TransitionModel: outcome state out of range");
                    mass += outcome.probability;
                }
                if (std::abs(mass - 1.0) > tolerance)
                    throw config_error("TransitionModel: probabilities of state " +
                                       std::to_string(s) + " action " +
                                       std::to_string(entry.action) + " sum to " +
                                       std::to_string(mass));
            }
        }
    }

private:
    std::size_t index(std::int32_t state) const {
        if (state < 0 || static_cast<std::size_t>(state) >= entries_.size())
            throw config_error("TransitionModel: state id out of range");
        return static_cast<std::size_t>(state);
    }

    std::vector<std::vector<ActionEntry>> entries_;
    std::vector<char> terminal_;
};

}  // namespace mcts::oracle
