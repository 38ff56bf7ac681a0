#pragma once

#include <stdexcept>
#include <string>

namespace mcts {

/// A caller broke a documented precondition (illegal action, scoring an
/// unvisited child, expanding a fully explored node, ...).
class contract_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Generic solver only: while replaying the inducing-action chain of a node,
/// a stored action turned out to be illegal in the freshly sampled parent
/// state. The surrounding iteration is aborted and counted as a no-op.
class replay_divergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// best_action() was asked of a root with no explored children.
class no_decision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative fixed-point computation did not reach its tolerance within
/// the sweep cap (typically a sign of discount = 1 on an improper model).
class convergence_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid solver or benchmark configuration.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File read/write failure; the message names the offending path.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mcts
