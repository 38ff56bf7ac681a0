#pragma once

#include <utility>

#include "mcts/bench/benchmark_config.hpp"
#include "mcts/domains/connect_four.hpp"
#include "mcts/domains/game_2048.hpp"
#include "mcts/domains/grid_world.hpp"
#include "mcts/domains/push_your_luck.hpp"
#include "mcts/domains/reversi.hpp"
#include "mcts/generic_solver.hpp"
#include "mcts/stateful_solver.hpp"

namespace mcts::bench {

/// Invokes `fn` with the concrete domain instance named by the config.
template <typename Fn>
decltype(auto) with_domain(const BenchmarkConfig& config, Fn&& fn) {
    switch (config.domain) {
        case DomainId::gridworld: {
            const auto layout = config.layout_path
                                    ? domains::GridWorldLayout::from_file(*config.layout_path)
                                    : domains::GridWorldLayout{};
            const domains::GridWorldMdp mdp(layout, config.gridworld_noise);
            return fn(mdp);
        }
        case DomainId::pyl: {
            const domains::PushYourLuckMdp mdp;
            return fn(mdp);
        }
        case DomainId::g2048: {
            const domains::Game2048Mdp mdp;
            return fn(mdp);
        }
        case DomainId::connect4: {
            const domains::Connect4Mdp mdp;
            return fn(mdp);
        }
        case DomainId::reversi: {
            const domains::ReversiMdp mdp;
            return fn(mdp);
        }
    }
    throw config_error("with_domain: unreachable domain id");
}

/// Invokes `fn` with a freshly built solver of the requested variant.
template <typename StateT, typename ActionT, typename Fn>
decltype(auto) with_solver(const MarkovDecisionProcess<StateT, ActionT>& mdp,
                           SolverVariant variant, const SolverConfig& config, Fn&& fn) {
    if (variant == SolverVariant::generic) {
        GenericSolver<StateT, ActionT> solver(mdp, config);
        return fn(solver);
    }
    StatefulSolver<StateT, ActionT> solver(mdp, config);
    return fn(solver);
}

}  // namespace mcts::bench
