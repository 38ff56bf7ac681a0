#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "mcts/errors.hpp"
#include "mcts/mdp.hpp"

namespace mcts::domains {

/// A disc placement, or the forced pass (x < 0). Pass is offered exactly when
/// the mover has no flipping move.
struct ReversiAction {
    std::int8_t x = -1;
    std::int8_t y = -1;

    bool operator==(const ReversiAction&) const = default;
    bool is_pass() const { return x < 0; }
    static ReversiAction pass() { return {}; }
};

inline std::string action_name(ReversiAction action) {
    if (action.is_pass()) return "pass";
    std::string name;
    name += static_cast<char>('a' + action.x);
    name += static_cast<char>('1' + action.y);
    return name;
}

/// 8x8 board, one bitboard per colour (0 = dark, 1 = light), bit index
/// y * 8 + x. Two consecutive passes end the game.
struct ReversiState {
    std::uint64_t discs[2] = {0, 0};
    std::uint8_t to_move = 0;
    std::uint8_t consecutive_passes = 0;

    bool operator==(const ReversiState&) const = default;

    std::uint64_t occupied() const { return discs[0] | discs[1]; }
    int disc_count(int colour) const { return std::popcount(discs[colour]); }
};

namespace reversi_detail {

constexpr std::uint64_t kNotFileA = 0xfefefefefefefefeULL;  // x != 0
constexpr std::uint64_t kNotFileH = 0x7f7f7f7f7f7f7f7fULL;  // x != 7

// Directions: +E/-W move along x, +N/-S along y (bit 0 is a1).
inline std::uint64_t shift(std::uint64_t b, int direction) {
    switch (direction) {
        case 0: return (b & kNotFileH) << 1;   // E
        case 1: return (b & kNotFileA) >> 1;   // W
        case 2: return b << 8;                 // N
        case 3: return b >> 8;                 // S
        case 4: return (b & kNotFileH) << 9;   // NE
        case 5: return (b & kNotFileA) << 7;   // NW
        case 6: return (b & kNotFileH) >> 7;   // SE
        case 7: return (b & kNotFileA) >> 9;   // SW
    }
    return 0;
}

inline std::uint64_t legal_moves(std::uint64_t own, std::uint64_t opp) {
    const std::uint64_t empty = ~(own | opp);
    std::uint64_t moves = 0;
    for (int dir = 0; dir < 8; ++dir) {
        std::uint64_t flood = shift(own, dir) & opp;
        for (int i = 0; i < 5; ++i) flood |= shift(flood, dir) & opp;
        moves |= shift(flood, dir) & empty;
    }
    return moves;
}

inline std::uint64_t flips_for(std::uint64_t move_bit, std::uint64_t own, std::uint64_t opp) {
    std::uint64_t flips = 0;
    for (int dir = 0; dir < 8; ++dir) {
        std::uint64_t line = 0;
        std::uint64_t cursor = shift(move_bit, dir);
        while (cursor & opp) {
            line |= cursor;
            cursor = shift(cursor, dir);
        }
        if (cursor & own) flips |= line;
    }
    return flips;
}

}  // namespace reversi_detail

/**
 * Standard Reversi. Legal actions are the flipping placements of the side to
 * move, enumerated in bit order (a1, b1, ..., h8); when none exists the sole
 * action is a pass. The game ends on a full board or two consecutive passes;
 * the terminal reward is the disc majority (+1 / -1 / 0) from the configured
 * agent's perspective. Opponent moves are ordinary tree actions and default
 * rollouts are uniformly random for both sides.
 */
class ReversiMdp final : public MarkovDecisionProcess<ReversiState, ReversiAction> {
public:
    /// Fresh game (standard four-disc opening, dark to move), rewards from
    /// dark's perspective.
    ReversiMdp() : root_state_(standard_opening()), agent_(0) {}

    /// Search from `root_state`, rewards from `agent`'s perspective
    /// (0 = dark, 1 = light).
    ReversiMdp(ReversiState root_state, std::uint8_t agent)
        : root_state_(root_state), agent_(agent) {}

    static ReversiState standard_opening() {
        ReversiState state;
        state.discs[1] = (std::uint64_t{1} << (3 * 8 + 3)) | (std::uint64_t{1} << (4 * 8 + 4));
        state.discs[0] = (std::uint64_t{1} << (3 * 8 + 4)) | (std::uint64_t{1} << (4 * 8 + 3));
        return state;
    }

    ReversiState transition(const ReversiState& state, const ReversiAction& action,
                            Rng&) const override {
        return apply(state, action);
    }

    /// Deterministic rules step, usable without an RNG.
    static ReversiState apply(const ReversiState& state, const ReversiAction& action) {
        using namespace reversi_detail;
        const std::uint64_t own = state.discs[state.to_move];
        const std::uint64_t opp = state.discs[state.to_move ^ 1];
        ReversiState next = state;
        if (action.is_pass()) {
            if (legal_moves(own, opp) != 0)
                throw contract_violation("Reversi transition: pass with flipping moves available");
            next.consecutive_passes = static_cast<std::uint8_t>(state.consecutive_passes + 1);
        } else {
            if (action.x >= 8 || action.y < 0 || action.y >= 8)
                throw contract_violation("Reversi transition: square off the board");
            const std::uint64_t move_bit = std::uint64_t{1}
                                           << (action.y * 8 + action.x);
            const std::uint64_t flips = flips_for(move_bit, own, opp);
            if ((move_bit & state.occupied()) || flips == 0)
                throw contract_violation("Reversi transition: illegal move " +
                                         action_name(action));
            next.discs[state.to_move] = own | move_bit | flips;
            next.discs[state.to_move ^ 1] = opp & ~flips;
            next.consecutive_passes = 0;
        }
        next.to_move ^= 1;
        return next;
    }

    double reward(const ReversiState*, const ReversiAction*,
                  const ReversiState& state) const override {
        if (!is_terminal(state)) return 0.0;
        const int own = state.disc_count(agent_);
        const int opp = state.disc_count(agent_ ^ 1);
        if (own > opp) return 1.0;
        if (own < opp) return -1.0;
        return 0.0;
    }

    ReversiState initial_state() const override { return root_state_; }

    bool is_terminal(const ReversiState& state) const override {
        return state.consecutive_passes >= 2 || state.occupied() == ~std::uint64_t{0};
    }

    std::vector<ReversiAction> actions(const ReversiState& state) const override {
        if (is_terminal(state)) return {};
        std::uint64_t moves =
            reversi_detail::legal_moves(state.discs[state.to_move], state.discs[state.to_move ^ 1]);
        if (moves == 0) return {ReversiAction::pass()};
        std::vector<ReversiAction> result;
        result.reserve(static_cast<std::size_t>(std::popcount(moves)));
        while (moves) {
            const int bit = std::countr_zero(moves);
            moves &= moves - 1;
            result.push_back({static_cast<std::int8_t>(bit % 8), static_cast<std::int8_t>(bit / 8)});
        }
        return result;
    }

    std::uint8_t agent() const { return agent_; }

private:
    ReversiState root_state_;
    std::uint8_t agent_;
};

}  // namespace mcts::domains
