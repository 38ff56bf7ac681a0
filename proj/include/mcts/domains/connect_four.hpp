#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "mcts/errors.hpp"
#include "mcts/mdp.hpp"

namespace mcts::domains {

struct Connect4Action {
    std::uint8_t column = 0;
    bool operator==(const Connect4Action&) const = default;
};

inline std::string action_name(Connect4Action action) {
    return "col" + std::to_string(static_cast<int>(action.column));
}

/// 7x6 board, one bitboard per player. Bit index column * 7 + row (row 0 is
/// the bottom); the 7th bit of each column stays empty so shift-based win
/// detection cannot wrap across columns.
struct Connect4State {
    std::uint64_t discs[2] = {0, 0};
    std::uint8_t to_move = 0;

    bool operator==(const Connect4State&) const = default;

    std::uint64_t occupied() const { return discs[0] | discs[1]; }
    int height(int column) const {
        return std::popcount(occupied() & (std::uint64_t{0x3F} << (column * 7)));
    }
};

/// Four in a row along vertical (+1), horizontal (+7) or either diagonal
/// (+6, +8) in the column-major encoding above.
inline bool connect4_won(std::uint64_t bitboard) {
    for (int shift : {1, 7, 6, 8}) {
        const std::uint64_t pairs = bitboard & (bitboard >> shift);
        if (pairs & (pairs >> (2 * shift))) return true;
    }
    return false;
}

/**
 * Standard Connect 4, played from the perspective of one agent: the terminal
 * reward is +1 if that player made four in a row, -1 if the opponent did, 0
 * for a full-board draw. Both players' moves are ordinary tree actions; the
 * solver owns no opponent model beyond its own search.
 */
class Connect4Mdp final : public MarkovDecisionProcess<Connect4State, Connect4Action> {
public:
    /// Fresh game, rewards from the first player's perspective.
    Connect4Mdp() = default;

    /// Search from `root_state`, rewards from `agent`'s perspective (0 or 1).
    Connect4Mdp(Connect4State root_state, std::uint8_t agent)
        : root_state_(root_state), agent_(agent) {}

    Connect4State transition(const Connect4State& state, const Connect4Action& action,
                             Rng&) const override {
        if (action.column >= 7 || state.height(action.column) >= 6 || is_terminal(state))
            throw contract_violation("Connect4 transition: illegal drop in column " +
                                     std::to_string(static_cast<int>(action.column)));
        Connect4State next = state;
        const int row = state.height(action.column);
        next.discs[state.to_move] |= std::uint64_t{1} << (action.column * 7 + row);
        next.to_move ^= 1;
        return next;
    }

    double reward(const Connect4State*, const Connect4Action*,
                  const Connect4State& state) const override {
        if (connect4_won(state.discs[agent_])) return 1.0;
        if (connect4_won(state.discs[agent_ ^ 1])) return -1.0;
        return 0.0;
    }

    Connect4State initial_state() const override { return root_state_; }

    bool is_terminal(const Connect4State& state) const override {
        return connect4_won(state.discs[0]) || connect4_won(state.discs[1]) ||
               std::popcount(state.occupied()) == 42;
    }

    std::vector<Connect4Action> actions(const Connect4State& state) const override {
        if (is_terminal(state)) return {};
        std::vector<Connect4Action> result;
        for (std::uint8_t column = 0; column < 7; ++column)
            if (state.height(column) < 6) result.push_back({column});
        return result;
    }

    std::uint8_t agent() const { return agent_; }

private:
    Connect4State root_state_{};
    std::uint8_t agent_ = 0;
};

}  // namespace mcts::domains
