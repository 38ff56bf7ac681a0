#pragma once

#include <array>
#include <cstdint>

#include "mcts/errors.hpp"
#include "mcts/mdp.hpp"

namespace mcts::domains {

enum class Move2048 : std::uint8_t { up = 0, down = 1, left = 2, right = 3 };

inline const char* action_name(Move2048 move) {
    switch (move) {
        case Move2048::up: return "up";
        case Move2048::down: return "down";
        case Move2048::left: return "left";
        case Move2048::right: return "right";
    }
    return "?";
}

/// 4x4 board packed as 16 nibbles (tile exponents, 0 = empty; cell index
/// y * 4 + x with y = 0 the top row) plus the accumulated merge score.
struct State2048 {
    std::uint64_t board = 0;
    std::uint32_t score = 0;
    bool operator==(const State2048&) const = default;

    std::uint8_t exponent(int x, int y) const {
        return static_cast<std::uint8_t>((board >> ((y * 4 + x) * 4)) & 0xF);
    }
    void set_exponent(int x, int y, std::uint8_t exp) {
        const int shift = (y * 4 + x) * 4;
        board = (board & ~(std::uint64_t{0xF} << shift)) |
                (static_cast<std::uint64_t>(exp & 0xF) << shift);
    }
};

/**
 * The sliding-tile game 2048. Moves that do not change the board are not
 * offered, so `actions` is empty exactly at dead boards. After each move a
 * tile spawns in a uniformly random empty cell: 2 with probability 0.9, 4
 * with probability 0.1. The reward of a state is its accumulated merge score
 * divided by a configurable normalizer, which keeps values in a range the
 * exploration term can compete with. The start position is a fixed two-tile
 * opening (the contract requires a pure initial_state, so the usual random
 * opening spawns are pinned).
 */
class Game2048Mdp final : public MarkovDecisionProcess<State2048, Move2048> {
public:
    explicit Game2048Mdp(double reward_normalizer = 2048.0)
        : reward_normalizer_(reward_normalizer) {
        if (!(reward_normalizer_ > 0.0))
            throw config_error("Game2048Mdp: reward normalizer must be positive");
    }

    State2048 transition(const State2048& state, const Move2048& action,
                         Rng& rng) const override {
        State2048 next = slide(state, action);
        if (next.board == state.board)
            throw contract_violation("2048 transition: move does not change the board");
        spawn(next, rng);
        return next;
    }

    double reward(const State2048*, const Move2048*, const State2048& state) const override {
        return static_cast<double>(state.score) / reward_normalizer_;
    }

    State2048 initial_state() const override {
        State2048 state;
        state.set_exponent(1, 1, 1);
        state.set_exponent(2, 2, 1);
        return state;
    }

    bool is_terminal(const State2048& state) const override {
        for (Move2048 move : {Move2048::up, Move2048::down, Move2048::left, Move2048::right})
            if (slide(state, move).board != state.board) return false;
        return true;
    }

    std::vector<Move2048> actions(const State2048& state) const override {
        std::vector<Move2048> result;
        for (Move2048 move : {Move2048::up, Move2048::down, Move2048::left, Move2048::right})
            if (slide(state, move).board != state.board) result.push_back(move);
        return result;
    }

    /// Slide-and-merge without the spawn; exposed for tests.
    static State2048 slide(const State2048& state, Move2048 move) {
        State2048 next = state;
        for (int lane = 0; lane < 4; ++lane) {
            std::array<std::uint8_t, 4> line{};
            for (int i = 0; i < 4; ++i) line[i] = lane_cell(state, move, lane, i);
            std::uint32_t gained = 0;
            line = collapse(line, gained);
            next.score += gained;
            for (int i = 0; i < 4; ++i) set_lane_cell(next, move, lane, i, line[i]);
        }
        return next;
    }

    double reward_normalizer() const { return reward_normalizer_; }

private:
    // Lane coordinates run in the direction tiles move, so index 0 is the
    // edge a tile lands on.
    static std::uint8_t lane_cell(const State2048& s, Move2048 move, int lane, int i) {
        switch (move) {
            case Move2048::left: return s.exponent(i, lane);
            case Move2048::right: return s.exponent(3 - i, lane);
            case Move2048::up: return s.exponent(lane, i);
            case Move2048::down: return s.exponent(lane, 3 - i);
        }
        return 0;
    }

    static void set_lane_cell(State2048& s, Move2048 move, int lane, int i, std::uint8_t exp) {
        switch (move) {
            case Move2048::left: s.set_exponent(i, lane, exp); break;
            case Move2048::right: s.set_exponent(3 - i, lane, exp); break;
            case Move2048::up: s.set_exponent(lane, i, exp); break;
            case Move2048::down: s.set_exponent(lane, 3 - i, exp); break;
        }
    }

    static std::array<std::uint8_t, 4> collapse(const std::array<std::uint8_t, 4>& line,
                                                std::uint32_t& gained) {
        std::array<std::uint8_t, 4> packed{};
        int count = 0;
        for (std::uint8_t v : line)
            if (v != 0) packed[count++] = v;
        std::array<std::uint8_t, 4> out{};
        int write = 0;
        for (int i = 0; i < count; ++i) {
            if (i + 1 < count && packed[i] == packed[i + 1]) {
                const std::uint8_t merged = packed[i] < 15 ? packed[i] + 1 : 15;
                out[write++] = merged;
                gained += std::uint32_t{1} << merged;
                ++i;
            } else {
                out[write++] = packed[i];
            }
        }
        return out;
    }

    static void spawn(State2048& state, Rng& rng) {
        std::array<std::uint8_t, 16> empty{};
        int count = 0;
        for (int cell = 0; cell < 16; ++cell)
            if (((state.board >> (cell * 4)) & 0xF) == 0)
                empty[count++] = static_cast<std::uint8_t>(cell);
        if (count == 0) return;  // full board after a merge-only move
        const int cell = empty[uniform_index(static_cast<std::size_t>(count), rng)];
        const std::uint8_t exp = uniform_unit(rng) < 0.9 ? 1 : 2;
        state.board |= static_cast<std::uint64_t>(exp) << (cell * 4);
    }

    double reward_normalizer_;
};

}  // namespace mcts::domains
