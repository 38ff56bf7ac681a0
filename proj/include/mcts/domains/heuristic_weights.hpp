#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <string>

#include "mcts/errors.hpp"

namespace mcts::domains {

/**
 * Positional desirability ratings for every Reversi square: positive means a
 * likely win, negative a likely loss. Used by the heuristic simulation policy
 * to bias rollout moves for both players. Tables loaded from a file must be
 * symmetric under all eight board symmetries — a square's value cannot depend
 * on the board's orientation.
 */
struct HeuristicWeightTable {
    std::array<std::array<int, 8>, 8> weights{};  // indexed [x][y]

    int weight(int x, int y) const { return weights[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }

    bool symmetric() const {
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y) {
                const int w = weights[x][y];
                if (w != weights[7 - x][y]) return false;
                if (w != weights[x][7 - y]) return false;
                if (w != weights[y][x]) return false;
            }
        return true;
    }

    /// Corner-dominant ratings in the style of the classic Reversi strategy
    /// tables: corners huge, the X- and C-squares beside them poisonous,
    /// edges mildly good. Ships as data/reversi_weights.txt too.
    static HeuristicWeightTable classic() {
        constexpr int rows[8][8] = {
            {100, -25, 10, 5, 5, 10, -25, 100},
            {-25, -50, -2, -2, -2, -2, -50, -25},
            {10, -2, 5, 1, 1, 5, -2, 10},
            {5, -2, 1, 2, 2, 1, -2, 5},
            {5, -2, 1, 2, 2, 1, -2, 5},
            {10, -2, 5, 1, 1, 5, -2, 10},
            {-25, -50, -2, -2, -2, -2, -50, -25},
            {100, -25, 10, 5, 5, 10, -25, 100},
        };
        HeuristicWeightTable table;
        for (int y = 0; y < 8; ++y)
            for (int x = 0; x < 8; ++x) table.weights[x][y] = rows[y][x];
        return table;
    }

    /// Plain text, 8 lines of 8 space-separated integers (line i is board row
    /// i). Validates shape and the eight-fold symmetry.
    static HeuristicWeightTable load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw io_error("cannot open heuristic weight table: " + path);
        HeuristicWeightTable table;
        for (int y = 0; y < 8; ++y)
            for (int x = 0; x < 8; ++x)
                if (!(in >> table.weights[x][y]))
                    throw io_error("heuristic weight table needs 8x8 integers: " + path);
        if (!table.symmetric())
            throw config_error("heuristic weight table is not symmetric under the board "
                               "symmetries: " + path);
        return table;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw io_error("cannot write heuristic weight table: " + path);
        for (int y = 0; y < 8; ++y) {
            for (int x = 0; x < 8; ++x) out << weights[x][y] << (x == 7 ? '\n' : ' ');
        }
        if (!out) throw io_error("failed writing heuristic weight table: " + path);
    }
};

}  // namespace mcts::domains
