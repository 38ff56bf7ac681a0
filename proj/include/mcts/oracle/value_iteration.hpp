#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "mcts/errors.hpp"
#include "mcts/oracle/transition_model.hpp"

namespace mcts::oracle {

/// Exact state values plus the greedy policy. policy[s] is an action id, or
/// -1 for terminal states and states without actions.
struct ValueFunction {
    std::vector<double> values;
    std::vector<std::int32_t> policy;
};

/// Q(s, a) = r(s, a) + gamma * sum_{s'} p(s'|s, a) * V(s').
inline double q_value(const TransitionModel& model, const std::vector<double>& values,
                      std::int32_t state, std::int32_t action, double discount) {
    for (const auto& entry : model.actions(state)) {
        if (entry.action != action) continue;
        double continuation = 0.0;
        for (const auto& outcome : entry.outcomes)
            continuation += outcome.probability * values[outcome.next_state];
        return entry.expected_reward + discount * continuation;
    }
    throw contract_violation("q_value: action not available in state");
}

struct ValueIterationOptions {
    double epsilon = 1e-9;          // max-norm convergence threshold
    std::uint32_t max_sweeps = 100000;
};

/**
 * Value iteration: repeats V(s) <- max_a Q(s, a) until the max-norm change
 * drops below epsilon, then extracts the greedy policy (argmax ties broken by
 * action enumeration order). Terminal states keep value 0.
 *
 * discount = 1 is admissible only when every policy eventually reaches a
 * terminal state; otherwise the sweep cap trips and convergence_failure is
 * thrown.
 */
inline ValueFunction value_iteration(const TransitionModel& model, double discount,
                                     ValueIterationOptions options = {}) {
    if (!(discount > 0.0) || discount > 1.0)
        throw config_error("value_iteration: discount must lie in (0, 1]");
    const std::size_t n = model.state_count();
    std::vector<double> values(n, 0.0);
    std::vector<double> next(n, 0.0);

    for (std::uint32_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
        double change = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            const auto& entries = model.actions(static_cast<std::int32_t>(s));
            if (model.terminal(static_cast<std::int32_t>(s)) || entries.empty()) {
                next[s] = 0.0;
                continue;
            }
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& entry : entries) {
                double continuation = 0.0;
                for (const auto& outcome : entry.outcomes)
                    continuation += outcome.probability * values[outcome.next_state];
                best = std::max(best, entry.expected_reward + discount * continuation);
            }
            next[s] = best;
            change = std::max(change, std::abs(next[s] - values[s]));
        }
        values.swap(next);
        if (change < options.epsilon) {
            ValueFunction result{std::move(values), std::vector<std::int32_t>(n, -1)};
            for (std::size_t s = 0; s < n; ++s) {
                const auto& entries = model.actions(static_cast<std::int32_t>(s));
                if (model.terminal(static_cast<std::int32_t>(s)) || entries.empty()) continue;
                double best = -std::numeric_limits<double>::infinity();
                for (const auto& entry : entries) {
                    const double q = q_value(model, result.values, static_cast<std::int32_t>(s),
                                             entry.action, discount);
                    if (q > best) {
                        best = q;
                        result.policy[s] = entry.action;
                    }
                }
            }
            return result;
        }
    }
    throw convergence_failure("value_iteration: no convergence within the sweep cap "
                              "(discount = 1 on an improper model?)");
}

/// All actions whose Q-value is within `tie_epsilon` of the maximum — the
/// oracle's notion of "either action is optimal".
inline std::vector<std::int32_t> greedy_actions(const TransitionModel& model,
                                                const std::vector<double>& values,
                                                std::int32_t state, double discount,
                                                double tie_epsilon = 1e-6) {
    std::vector<std::int32_t> result;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& entry : model.actions(state))
        best = std::max(best, q_value(model, values, state, entry.action, discount));
    for (const auto& entry : model.actions(state))
        if (q_value(model, values, state, entry.action, discount) >= best - tie_epsilon)
            result.push_back(entry.action);
    return result;
}

/**
 * Expected return of the uniform-random policy under the solver's simulation
 * semantics: the discount starts at gamma before the first step, and only
 * terminal rewards contribute (the model's non-terminal rewards are assumed
 * 0, which holds for the bundled grid domain). Evaluated by linear
 * fixed-point iteration; each sweep k yields the value of rollouts truncated
 * at depth k, so `depth_limit` doubles as the sweep cap. Terminal states map
 * to 0 (a rollout never starts there).
 */
inline std::vector<double> random_policy_value(const TransitionModel& model, double discount,
                                               std::uint32_t depth_limit = 100000,
                                               double epsilon = 1e-9) {
    const std::size_t n = model.state_count();
    std::vector<double> values(n, 0.0);
    std::vector<double> next(n, 0.0);
    for (std::uint32_t sweep = 0; sweep < depth_limit; ++sweep) {
        double change = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            const auto& entries = model.actions(static_cast<std::int32_t>(s));
            if (model.terminal(static_cast<std::int32_t>(s)) || entries.empty()) {
                next[s] = 0.0;
                continue;
            }
            // r(s, a) collapses to the terminal-successor mass when
            // non-terminal rewards are 0, so each action contributes its
            // expected immediate reward plus the non-terminal continuation.
            double total = 0.0;
            for (const auto& entry : entries) {
                double branch = entry.expected_reward;
                for (const auto& outcome : entry.outcomes)
                    if (!model.terminal(outcome.next_state))
                        branch += outcome.probability * values[outcome.next_state];
                total += branch;
            }
            next[s] = discount * total / static_cast<double>(entries.size());
            change = std::max(change, std::abs(next[s] - values[s]));
        }
        values.swap(next);
        if (change < epsilon) break;
    }
    return values;
}

}  // namespace mcts::oracle
