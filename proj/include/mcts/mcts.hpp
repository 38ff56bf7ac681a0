#pragma once

// Umbrella header: the solver core, the bundled benchmark domains and the
// exact-solution oracle.

#include "mcts/errors.hpp"
#include "mcts/generic_solver.hpp"
#include "mcts/mdp.hpp"
#include "mcts/node.hpp"
#include "mcts/rng.hpp"
#include "mcts/solver.hpp"
#include "mcts/solver_config.hpp"
#include "mcts/stateful_solver.hpp"

#include "mcts/domains/connect_four.hpp"
#include "mcts/domains/game_2048.hpp"
#include "mcts/domains/grid_world.hpp"
#include "mcts/domains/heuristic_weights.hpp"
#include "mcts/domains/push_your_luck.hpp"
#include "mcts/domains/reversi.hpp"
#include "mcts/domains/reversi_heuristic.hpp"

#include "mcts/oracle/grid_world_model.hpp"
#include "mcts/oracle/transition_model.hpp"
#include "mcts/oracle/value_iteration.hpp"
