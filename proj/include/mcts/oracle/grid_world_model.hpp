#pragma once

#include <array>
#include <cstdint>

#include "mcts/domains/grid_world.hpp"
#include "mcts/oracle/transition_model.hpp"

namespace mcts::oracle {

/// State id of a grid cell: row-major, y * width + x.
inline std::int32_t grid_state_id(const domains::GridWorldLayout& layout,
                                  const domains::GridState& state) {
    return state.y * layout.width + state.x;
}

inline domains::GridState grid_state_from_id(const domains::GridWorldLayout& layout,
                                             std::int32_t id) {
    return {id % layout.width, id / layout.width};
}

/// Writes the grid domain down as an explicit model: per (cell, move) the
/// intended/perpendicular successor distribution (wall bumps folded into
/// self-transitions) and the expected landing reward. Action ids match the
/// GridAction enumeration.
inline TransitionModel build_grid_world_model(const domains::GridWorldMdp& mdp) {
    using domains::GridAction;
    using domains::GridState;

    const auto& layout = mdp.layout();
    TransitionModel model(static_cast<std::size_t>(layout.width) * layout.height);

    for (std::int32_t y = 0; y < layout.height; ++y) {
        for (std::int32_t x = 0; x < layout.width; ++x) {
            const GridState state{x, y};
            const std::int32_t id = grid_state_id(layout, state);
            if (mdp.is_terminal(state)) {
                model.set_terminal(id);
                continue;
            }
            for (GridAction action : {GridAction::left, GridAction::up, GridAction::right,
                                      GridAction::down}) {
                const auto [perp_a, perp_b] = domains::GridWorldMdp::perpendicular(action);
                const std::array<std::pair<GridAction, double>, 3> branches{{
                    {action, 1.0 - mdp.noise()},
                    {perp_a, mdp.noise() / 2.0},
                    {perp_b, mdp.noise() / 2.0},
                }};

                double expected_reward = 0.0;
                auto& entry = model.add_action(id, static_cast<std::int32_t>(action), 0.0);
                for (const auto& [direction, probability] : branches) {
                    if (probability <= 0.0) continue;
                    const GridState next = mdp.step(state, direction);
                    const std::int32_t next_id = grid_state_id(layout, next);
                    expected_reward += probability * mdp.cell_reward(next.x, next.y);
                    bool merged = false;
                    for (auto& outcome : entry.outcomes) {
                        if (outcome.next_state == next_id) {
                            outcome.probability += probability;
                            merged = true;
                            break;
                        }
                    }
                    if (!merged) entry.outcomes.push_back({next_id, probability});
                }
                entry.expected_reward = expected_reward;
            }
        }
    }
    model.validate();
    return model;
}

}  // namespace mcts::oracle
