#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mcts/errors.hpp"
#include "mcts/mdp.hpp"

namespace mcts::domains {

/// The four compass moves, enumerated left, up, right, down. This order is
/// the tie-breaking order everywhere.
enum class GridAction : std::uint8_t { left = 0, up = 1, right = 2, down = 3 };

inline const char* action_name(GridAction action) {
    switch (action) {
        case GridAction::left: return "left";
        case GridAction::up: return "up";
        case GridAction::right: return "right";
        case GridAction::down: return "down";
    }
    return "?";
}

struct GridState {
    std::int32_t x = 0;
    std::int32_t y = 0;
    bool operator==(const GridState&) const = default;
};

struct GridCell {
    std::int32_t x = 0;
    std::int32_t y = 0;
    double reward = 0.0;
};

/// Grid geometry plus the terminal reward cells. The default is the 8x5
/// benchmark layout: +5 at (0,0), -1 at (0,4) and (6,1), start at (3,2).
/// Cell (0,0) is the bottom-left corner; `down` decreases y.
struct GridWorldLayout {
    std::int32_t width = 8;
    std::int32_t height = 5;
    GridState start{3, 2};
    std::vector<GridCell> terminal_cells{{0, 0, 5.0}, {0, 4, -1.0}, {6, 1, -1.0}};

    /// Plain-text format:
    ///   line 1: width height
    ///   line 2: start_x start_y
    ///   then one `x y reward` terminal cell per line.
    static GridWorldLayout from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw io_error("cannot open grid layout file: " + path);
        GridWorldLayout layout;
        layout.terminal_cells.clear();
        if (!(in >> layout.width >> layout.height))
            throw io_error("grid layout file missing width/height: " + path);
        if (!(in >> layout.start.x >> layout.start.y))
            throw io_error("grid layout file missing start cell: " + path);
        GridCell cell;
        while (in >> cell.x >> cell.y >> cell.reward) layout.terminal_cells.push_back(cell);
        if (!in.eof() && in.fail())
            throw io_error("malformed grid layout file: " + path);
        return layout;
    }

    void validate() const {
        if (width < 1 || height < 1) throw config_error("grid layout: empty grid");
        auto inside = [&](std::int32_t x, std::int32_t y) {
            return x >= 0 && x < width && y >= 0 && y < height;
        };
        if (!inside(start.x, start.y)) throw config_error("grid layout: start off the grid");
        for (const auto& cell : terminal_cells) {
            if (!inside(cell.x, cell.y)) throw config_error("grid layout: terminal cell off the grid");
            if (cell.x == start.x && cell.y == start.y)
                throw config_error("grid layout: start cell is terminal");
        }
    }
};

/**
 * Single-agent stochastic grid navigation. Every non-terminal cell offers all
 * four moves; a move walks one cell with probability 1 - noise and slips to
 * one of the two perpendicular directions with probability noise / 2 each.
 * Moves off the grid (or into a wall) leave the agent in place and are legal
 * no-ops, keeping the branching factor at 4. The reward of a state is its
 * cell reward (0 for plain cells); cells with a listed reward are absorbing.
 */
class GridWorldMdp final : public MarkovDecisionProcess<GridState, GridAction> {
public:
    explicit GridWorldMdp(GridWorldLayout layout = {}, double noise = 0.2)
        : layout_(std::move(layout)), noise_(noise) {
        layout_.validate();
        if (!(noise_ >= 0.0) || !(noise_ <= 1.0))
            throw config_error("GridWorldMdp: noise must lie in [0, 1]");
        cell_reward_.assign(static_cast<std::size_t>(layout_.width) * layout_.height, 0.0);
        terminal_.assign(cell_reward_.size(), 0);
        for (const auto& cell : layout_.terminal_cells) {
            cell_reward_[cell_index(cell.x, cell.y)] = cell.reward;
            terminal_[cell_index(cell.x, cell.y)] = 1;
        }
    }

    GridState transition(const GridState& state, const GridAction& action,
                         Rng& rng) const override {
        if (is_terminal(state))
            throw contract_violation("GridWorld transition: state (" + std::to_string(state.x) +
                                     "," + std::to_string(state.y) + ") is terminal");
        GridAction actual = action;
        if (noise_ > 0.0) {
            const double u = uniform_unit(rng);
            if (u >= 1.0 - noise_) {
                const auto [first, second] = perpendicular(action);
                actual = (u < 1.0 - noise_ / 2.0) ? first : second;
            }
        }
        return step(state, actual);
    }

    double reward(const GridState*, const GridAction*, const GridState& state) const override {
        return cell_reward_[cell_index(state.x, state.y)];
    }

    GridState initial_state() const override { return layout_.start; }

    bool is_terminal(const GridState& state) const override {
        return terminal_[cell_index(state.x, state.y)] != 0;
    }

    std::vector<GridAction> actions(const GridState& state) const override {
        if (is_terminal(state)) return {};
        return {GridAction::left, GridAction::up, GridAction::right, GridAction::down};
    }

    /// Deterministic one-cell move; off-grid moves stay in place.
    GridState step(const GridState& state, GridAction action) const {
        GridState next = state;
        switch (action) {
            case GridAction::left: next.x -= 1; break;
            case GridAction::right: next.x += 1; break;
            case GridAction::up: next.y += 1; break;
            case GridAction::down: next.y -= 1; break;
        }
        if (next.x < 0 || next.x >= layout_.width || next.y < 0 || next.y >= layout_.height)
            return state;
        return next;
    }

    static std::pair<GridAction, GridAction> perpendicular(GridAction action) {
        if (action == GridAction::left || action == GridAction::right)
            return {GridAction::up, GridAction::down};
        return {GridAction::left, GridAction::right};
    }

    const GridWorldLayout& layout() const { return layout_; }
    double noise() const { return noise_; }
    double cell_reward(std::int32_t x, std::int32_t y) const {
        return cell_reward_[cell_index(x, y)];
    }

private:
    std::size_t cell_index(std::int32_t x, std::int32_t y) const {
        return static_cast<std::size_t>(y) * layout_.width + x;
    }

    GridWorldLayout layout_;
    double noise_;
    std::vector<double> cell_reward_;
    std::vector<char> terminal_;
};

}  // namespace mcts::domains
