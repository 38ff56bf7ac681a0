#pragma once

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mcts/bench/benchmark_config.hpp"
#include "mcts/domains/connect_four.hpp"
#include "mcts/domains/reversi.hpp"
#include "mcts/domains/reversi_heuristic.hpp"
#include "mcts/stateful_solver.hpp"

namespace mcts::bench {

enum class TournamentSolverKind { vanilla, heuristic };

inline TournamentSolverKind parse_solver_kind(const std::string& name) {
    if (name == "vanilla") return TournamentSolverKind::vanilla;
    if (name == "heuristic") return TournamentSolverKind::heuristic;
    throw config_error("unknown tournament side kind: " + name + " (expected vanilla|heuristic)");
}

/// Per-side budgets: each move of that side is computed by a fresh solver
/// with these settings. Tournaments default to undiscounted rewards — the
/// two-player domains pay +1/-1/0 at the end of the game, and discounting
/// across a 60-ply horizon crushes that signal below the exploration term.
struct TournamentSide {
    TournamentSolverKind kind = TournamentSolverKind::vanilla;
    std::uint32_t iterations = 500;
    std::uint32_t depth_limit = 1000;
    double exploration_c = 1.0;
    double discount = 1.0;
};

enum class MatchWinner { side_a, side_b, tie };

inline const char* winner_name(MatchWinner winner) {
    switch (winner) {
        case MatchWinner::side_a: return "side_a";
        case MatchWinner::side_b: return "side_b";
        case MatchWinner::tie: return "tie";
    }
    return "?";
}

struct MatchRecord {
    std::uint32_t game = 0;
    MatchWinner winner = MatchWinner::tie;
    std::uint32_t moves = 0;
    std::uint32_t side_a_iterations = 0;
    std::uint32_t side_a_depth = 0;
    std::uint32_t side_b_iterations = 0;
    std::uint32_t side_b_depth = 0;
};

struct TournamentResult {
    std::vector<MatchRecord> records;
    std::uint32_t side_a_wins = 0;
    std::uint32_t side_b_wins = 0;
    std::uint32_t ties = 0;
    double side_a_win_rate = 0.0;  // wins / games; ties count as non-wins
};

namespace detail {

struct ReversiMatchTraits {
    using State = domains::ReversiState;
    using Action = domains::ReversiAction;

    static State initial() { return domains::ReversiMdp::standard_opening(); }
    static bool terminal(const State& state) { return domains::ReversiMdp().is_terminal(state); }
    static int mover(const State& state) { return state.to_move; }
    static State apply(const State& state, const Action& action) {
        return domains::ReversiMdp::apply(state, action);
    }
    /// 0 / 1 for a colour win, -1 for a tie.
    static int winner_colour(const State& state) {
        const int dark = state.disc_count(0);
        const int light = state.disc_count(1);
        if (dark > light) return 0;
        if (light > dark) return 1;
        return -1;
    }
    static Action compute_move(const State& state, const TournamentSide& side,
                               const domains::HeuristicWeightTable& table,
                               std::uint64_t move_seed) {
        const domains::ReversiMdp mdp(state, state.to_move);
        SolverConfig config;
        config.exploration_constant = side.exploration_c;
        config.reward_discount_factor = side.discount;
        config.simulation_depth_limit = side.depth_limit;
        config.iteration_budget = side.iterations;
        config.rng_seed = move_seed;
        if (side.kind == TournamentSolverKind::heuristic) {
            domains::ReversiHeuristicSolver solver(mdp, config, table);
            solver.run_tree_search();
            return solver.best_action();
        }
        StatefulSolver<State, Action> solver(mdp, config);
        solver.run_tree_search();
        return solver.best_action();
    }
};

struct Connect4MatchTraits {
    using State = domains::Connect4State;
    using Action = domains::Connect4Action;

    static State initial() { return {}; }
    static bool terminal(const State& state) { return domains::Connect4Mdp().is_terminal(state); }
    static int mover(const State& state) { return state.to_move; }
    static State apply(const State& state, const Action& action) {
        Rng unused(0);  // deterministic rules
        return domains::Connect4Mdp().transition(state, action, unused);
    }
    static int winner_colour(const State& state) {
        if (domains::connect4_won(state.discs[0])) return 0;
        if (domains::connect4_won(state.discs[1])) return 1;
        return -1;
    }
    static Action compute_move(const State& state, const TournamentSide& side,
                               const domains::HeuristicWeightTable&, std::uint64_t move_seed) {
        const domains::Connect4Mdp mdp(state, state.to_move);
        SolverConfig config;
        config.exploration_constant = side.exploration_c;
        config.reward_discount_factor = side.discount;
        config.simulation_depth_limit = side.depth_limit;
        config.iteration_budget = side.iterations;
        config.rng_seed = move_seed;
        StatefulSolver<State, Action> solver(mdp, config);
        solver.run_tree_search();
        return solver.best_action();
    }
};

template <typename Traits>
MatchRecord play_match(std::uint32_t game_index, const TournamentSide& side_a,
                       const TournamentSide& side_b, std::uint64_t seed, bool fixed_colors,
                       const domains::HeuristicWeightTable& table) {
    Rng game_rng(seed + game_index);  // self-contained per game
    const bool a_plays_first_colour = fixed_colors || game_index % 2 == 0;

    typename Traits::State state = Traits::initial();
    std::uint32_t moves = 0;
    while (!Traits::terminal(state)) {
        const bool side_a_to_move = (Traits::mover(state) == 0) == a_plays_first_colour;
        const TournamentSide& side = side_a_to_move ? side_a : side_b;
        const auto action = Traits::compute_move(state, side, table, game_rng());
        state = Traits::apply(state, action);
        ++moves;
    }

    MatchRecord record;
    record.game = game_index;
    record.moves = moves;
    record.side_a_iterations = side_a.iterations;
    record.side_a_depth = side_a.depth_limit;
    record.side_b_iterations = side_b.iterations;
    record.side_b_depth = side_b.depth_limit;
    const int colour = Traits::winner_colour(state);
    if (colour < 0)
        record.winner = MatchWinner::tie;
    else
        record.winner = ((colour == 0) == a_plays_first_colour) ? MatchWinner::side_a
                                                                : MatchWinner::side_b;
    return record;
}

template <typename Traits>
TournamentResult run_match_series(std::uint32_t games, const TournamentSide& side_a,
                                  const TournamentSide& side_b, std::uint64_t seed,
                                  const domains::HeuristicWeightTable& table,
                                  std::uint32_t workers, bool fixed_colors) {
    TournamentResult result;
    result.records.resize(games);

    std::atomic<std::uint32_t> next_game{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            const std::uint32_t game = next_game.fetch_add(1);
            if (game >= games) return;
            try {
                result.records[game] =
                    play_match<Traits>(game, side_a, side_b, seed, fixed_colors, table);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    std::uint32_t thread_count = workers != 0 ? workers : std::thread::hardware_concurrency();
    if (thread_count == 0) thread_count = 1;
    if (thread_count > games) thread_count = games;

    if (thread_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::uint32_t i = 0; i < thread_count; ++i) pool.emplace_back(work);
        for (auto& thread : pool) thread.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& record : result.records) {
        switch (record.winner) {
            case MatchWinner::side_a: ++result.side_a_wins; break;
            case MatchWinner::side_b: ++result.side_b_wins; break;
            case MatchWinner::tie: ++result.ties; break;
        }
    }
    result.side_a_win_rate = static_cast<double>(result.side_a_wins) / games;
    return result;
}

}  // namespace detail

/**
 * Plays `games` full games between two solver configurations on a two-player
 * domain. Every move is computed by a fresh solver for the side to move (no
 * tree reuse), colours alternate from game to game unless `fixed_colors`, and
 * each game derives its own seed as seed + game index, so results are
 * deterministic for a given seed regardless of the worker count. The win rate
 * counts ties as non-wins.
 */
inline TournamentResult run_tournament(DomainId domain, std::uint32_t games,
                                       const TournamentSide& side_a,
                                       const TournamentSide& side_b, std::uint64_t seed,
                                       const domains::HeuristicWeightTable& table =
                                           domains::HeuristicWeightTable::classic(),
                                       std::uint32_t workers = 0, bool fixed_colors = false) {
    if (games < 1) throw config_error("run_tournament: games must be >= 1");
    switch (domain) {
        case DomainId::reversi:
            return detail::run_match_series<detail::ReversiMatchTraits>(
                games, side_a, side_b, seed, table, workers, fixed_colors);
        case DomainId::connect4:
            if (side_a.kind == TournamentSolverKind::heuristic ||
                side_b.kind == TournamentSolverKind::heuristic)
                throw config_error("run_tournament: the heuristic solver is Reversi-only");
            return detail::run_match_series<detail::Connect4MatchTraits>(
                games, side_a, side_b, seed, table, workers, fixed_colors);
        default:
            throw config_error(std::string("run_tournament: ") + domain_name(domain) +
                               " is not a two-player domain");
    }
}

/// Columns: game, winner, moves, side_a_iterations, side_a_depth,
/// side_b_iterations, side_b_depth.
inline void write_tournament_file(const std::string& path,
                                  const std::vector<MatchRecord>& records) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write tournament file: " + path);
    out << "game,winner,moves,side_a_iterations,side_a_depth,side_b_iterations,side_b_depth\n";
    for (const auto& r : records) {
        out << r.game << ',' << winner_name(r.winner) << ',' << r.moves << ','
            << r.side_a_iterations << ',' << r.side_a_depth << ',' << r.side_b_iterations << ','
            << r.side_b_depth << '\n';
    }
    if (!out) throw io_error("failed writing tournament file: " + path);
}

inline std::vector<MatchRecord> read_tournament_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open tournament file: " + path);
    std::string line;
    if (!std::getline(in, line) ||
        line != "game,winner,moves,side_a_iterations,side_a_depth,side_b_iterations,side_b_depth")
        throw io_error("tournament file has an unexpected header: " + path);
    std::vector<MatchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream fields(line);
        MatchRecord record;
        std::string token;
        std::getline(fields, token, ',');
        record.game = static_cast<std::uint32_t>(std::stoul(token));
        std::getline(fields, token, ',');
        if (token == "side_a") record.winner = MatchWinner::side_a;
        else if (token == "side_b") record.winner = MatchWinner::side_b;
        else if (token == "tie") record.winner = MatchWinner::tie;
        else throw io_error("tournament file has an unexpected winner label: " + token);
        std::getline(fields, token, ',');
        record.moves = static_cast<std::uint32_t>(std::stoul(token));
        std::getline(fields, token, ',');
        record.side_a_iterations = static_cast<std::uint32_t>(std::stoul(token));
        std::getline(fields, token, ',');
        record.side_a_depth = static_cast<std::uint32_t>(std::stoul(token));
        std::getline(fields, token, ',');
        record.side_b_iterations = static_cast<std::uint32_t>(std::stoul(token));
        std::getline(fields, token, ',');
        record.side_b_depth = static_cast<std::uint32_t>(std::stoul(token));
        records.push_back(record);
    }
    return records;
}

}  // namespace mcts::bench
