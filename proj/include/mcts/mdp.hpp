#pragma once

#include <vector>

#include "mcts/rng.hpp"

namespace mcts {

/**
 * @brief The generative decision-process contract every domain implements and
 * every solver consumes.
 *
 * A domain is described purely through sampling: `transition` returns one
 * successor state instead of a distribution, so arbitrarily complex processes
 * can be plugged in without writing down explicit probabilities. Explicit
 * transition models exist only in the oracle module, for small domains that
 * can be solved exactly.
 *
 * Requirements on implementations:
 *  - `is_terminal` and `actions` are pure: the same input always yields the
 *    same output.
 *  - `actions(s)` is empty if and only if `s` has no legal continuation.
 *    Solvers treat such states as terminal even when `is_terminal(s)` is
 *    false, so a domain can never deadlock a search.
 *  - `transition` may be stochastic; all of its randomness must come from the
 *    `rng` argument. Implementations hold no mutable state and are therefore
 *    safe to share across concurrently running solvers.
 *  - `reward` must be defined for non-terminal states as well (conventionally
 *    0): depth-limited simulations evaluate the reward of wherever they stop.
 */
template <typename StateT, typename ActionT>
class MarkovDecisionProcess {
public:
    using State = StateT;
    using Action = ActionT;

    virtual ~MarkovDecisionProcess() = default;

    /// Samples one successor of `state` under `action`. Repeated calls with
    /// identical arguments may differ in stochastic domains.
    virtual State transition(const State& state, const Action& action, Rng& rng) const = 0;

    /// Reward of arriving in `state` via `inducing_action` taken from
    /// `parent_state`. Both pointers are null at the search root.
    virtual double reward(const State* parent_state, const Action* inducing_action,
                          const State& state) const = 0;

    /// The domain's start state; pure.
    virtual State initial_state() const = 0;

    virtual bool is_terminal(const State& state) const = 0;

    /// Legal actions in a stable, documented enumeration order (ties in the
    /// solvers are broken by this order). Empty exactly at states with no
    /// legal continuation.
    virtual std::vector<Action> actions(const State& state) const = 0;
};

}  // namespace mcts
