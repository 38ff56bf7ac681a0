#pragma once

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mcts/bench/convergence.hpp"
#include "mcts/bench/timing.hpp"
#include "mcts/bench/tournament.hpp"
#include "mcts/oracle/grid_world_model.hpp"
#include "mcts/oracle/value_iteration.hpp"

namespace mcts::bench {

namespace detail {

inline void dump_grid_world_oracle(const BenchmarkConfig& config, std::ostream& out) {
    const auto layout = config.layout_path
                            ? domains::GridWorldLayout::from_file(*config.layout_path)
                            : domains::GridWorldLayout{};
    const domains::GridWorldMdp mdp(layout, config.gridworld_noise);
    const auto model = oracle::build_grid_world_model(mdp);
    const auto solution = oracle::value_iteration(model, config.discount);

    out << "x,y,value,action\n";
    for (std::int32_t y = 0; y < layout.height; ++y) {
        for (std::int32_t x = 0; x < layout.width; ++x) {
            const auto id = oracle::grid_state_id(layout, {x, y});
            char value[32];
            std::snprintf(value, sizeof value, "%.9g", solution.values[id]);
            out << x << ',' << y << ',' << value << ',';
            if (mdp.is_terminal({x, y}))
                out << "terminal";
            else
                out << domains::action_name(
                       static_cast<domains::GridAction>(solution.policy[id]));
            out << '\n';
        }
    }
}

}  // namespace detail

/**
 * The benchmark command line. Subcommands:
 *   time        runtime per decision (mean/stddev over trials)
 *   converge    per-iteration root-action statistics of one seeded search
 *   tournament  two-player series between two solver configurations
 *   oracle      exact value-iteration solution of the grid domain
 * Returns a process exit status; 0 on success.
 */
inline int cli_entry(int argc, const char* const* argv) {
    CLI::App app{"Monte Carlo tree search benchmark harness"};
    app.require_subcommand(1);

    BenchmarkConfig config;
    std::string domain_str = "gridworld";
    std::string solver_str = "generic";
    std::string side_a_str = "heuristic";
    std::string side_b_str = "vanilla";
    std::uint32_t side_a_iterations = 0, side_b_iterations = 0;  // 0 = inherit --iterations
    std::uint32_t side_a_depth = 0, side_b_depth = 0;
    std::string layout_path, table_path;

    auto add_search_flags = [&](CLI::App* cmd, bool seed_required) {
        cmd->add_option("--domain", domain_str, "gridworld|pyl|2048|connect4|reversi");
        cmd->add_option("--solver", solver_str, "generic|stateful");
        cmd->add_option("--iterations", config.iterations, "tree-search iterations per decision");
        cmd->add_option("--depth-limit", config.depth_limit, "simulation depth limit");
        cmd->add_option("--exploration-c", config.exploration_c, "UCT exploration constant");
        cmd->add_option("--discount", config.discount, "reward discount factor");
        auto* seed = cmd->add_option("--seed", config.seed, "RNG seed");
        if (seed_required) seed->required();
        cmd->add_option("--noise", config.gridworld_noise, "gridworld slip probability");
        cmd->add_option("--layout", layout_path, "gridworld layout file");
    };

    auto* time_cmd = app.add_subcommand("time", "Measure runtime per decision");
    add_search_flags(time_cmd, false);
    time_cmd->add_option("--trials", config.trials, "independent decisions to time");
    time_cmd->add_option("--out", config.out_path, "write trial,seconds CSV here");

    auto* converge_cmd = app.add_subcommand("converge", "Export per-iteration root statistics");
    add_search_flags(converge_cmd, true);
    converge_cmd->add_option("--out", config.out_path, "output CSV path")->required();

    auto* tournament_cmd = app.add_subcommand("tournament", "Play two configurations against "
                                                            "each other");
    tournament_cmd->add_option("--domain", domain_str, "reversi|connect4 (default reversi)");
    tournament_cmd->add_option("--games", config.games, "number of games");
    tournament_cmd->add_option("--iterations", config.iterations, "iterations for both sides");
    tournament_cmd->add_option("--depth-limit", config.depth_limit, "depth limit for both sides");
    tournament_cmd->add_option("--exploration-c", config.exploration_c, "UCT exploration constant");
    tournament_cmd->add_option("--discount", config.discount,
                               "reward discount factor for both sides (default 1.0: "
                               "terminal win/loss rewards are not discounted)");
    tournament_cmd->add_option("--seed", config.seed, "RNG seed")->required();
    tournament_cmd->add_option("--side-a", side_a_str, "vanilla|heuristic (default heuristic)");
    tournament_cmd->add_option("--side-b", side_b_str, "vanilla|heuristic (default vanilla)");
    tournament_cmd->add_option("--side-a-iterations", side_a_iterations, "override for side a");
    tournament_cmd->add_option("--side-b-iterations", side_b_iterations, "override for side b");
    tournament_cmd->add_option("--side-a-depth", side_a_depth, "override for side a");
    tournament_cmd->add_option("--side-b-depth", side_b_depth, "override for side b");
    tournament_cmd->add_option("--heuristic-table", table_path, "weight table file (default: "
                                                                 "built-in classic table)");
    tournament_cmd->add_option("--workers", config.workers, "parallel games (0 = all cores)");
    tournament_cmd->add_flag("--fixed-colors", config.fixed_colors,
                             "side a always plays the first colour");
    tournament_cmd->add_option("--out", config.out_path, "output CSV path")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact grid-world solution");
    oracle_cmd->add_option("--discount", config.discount, "reward discount factor");
    oracle_cmd->add_option("--noise", config.gridworld_noise, "gridworld slip probability");
    oracle_cmd->add_option("--layout", layout_path, "gridworld layout file");
    oracle_cmd->add_option("--out", config.out_path, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (!layout_path.empty()) config.layout_path = layout_path;
        if (!table_path.empty()) config.heuristic_table_path = table_path;
        if (tournament_cmd->parsed() && tournament_cmd->count("--domain") == 0)
            domain_str = "reversi";
        config.domain = parse_domain(domain_str);
        config.solver = parse_solver(solver_str);

        if (time_cmd->parsed()) {
            const auto result = measure_decision_time(config);
            if (!config.out_path.empty()) write_timing_file(config.out_path, result);
            std::printf("domain=%s solver=%s iterations=%u trials=%zu\n",
                        domain_name(config.domain), solver_str.c_str(), config.iterations,
                        result.trial_seconds.size());
            std::printf("mean_seconds=%.6f stddev_seconds=%.6f\n", result.mean, result.stddev);
            std::printf("note: %s\n", result.hardware_note.c_str());
            return 0;
        }

        if (converge_cmd->parsed()) {
            const auto records = export_convergence(config);
            write_convergence_file(config.out_path, records);
            std::printf("wrote %zu records to %s\n", records.size(), config.out_path.c_str());
            return 0;
        }

        if (tournament_cmd->parsed()) {
            TournamentSide side_a, side_b;
            side_a.kind = parse_solver_kind(side_a_str);
            side_b.kind = parse_solver_kind(side_b_str);
            side_a.iterations = side_a_iterations ? side_a_iterations : config.iterations;
            side_b.iterations = side_b_iterations ? side_b_iterations : config.iterations;
            side_a.depth_limit = side_a_depth ? side_a_depth : config.depth_limit;
            side_b.depth_limit = side_b_depth ? side_b_depth : config.depth_limit;
            side_a.exploration_c = side_b.exploration_c = config.exploration_c;
            if (tournament_cmd->count("--discount") > 0)
                side_a.discount = side_b.discount = config.discount;
            const auto table = config.heuristic_table_path
                                   ? domains::HeuristicWeightTable::load(
                                         *config.heuristic_table_path)
                                   : domains::HeuristicWeightTable::classic();
            const auto result =
                run_tournament(config.domain, config.games, side_a, side_b, config.seed, table,
                               config.workers, config.fixed_colors);
            write_tournament_file(config.out_path, result.records);
            std::printf("games=%u side_a_wins=%u side_b_wins=%u ties=%u win_rate=%.4f\n",
                        config.games, result.side_a_wins, result.side_b_wins, result.ties,
                        result.side_a_win_rate);
            return 0;
        }

        if (oracle_cmd->parsed()) {
            config.domain = DomainId::gridworld;
            if (config.out_path.empty()) {
                detail::dump_grid_world_oracle(config, std::cout);
            } else {
                std::ofstream out(config.out_path);
                if (!out) throw io_error("cannot write oracle file: " + config.out_path);
                detail::dump_grid_world_oracle(config, out);
                if (!out) throw io_error("failed writing oracle file: " + config.out_path);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

/// Convenience overload for in-process invocation; `args` excludes the
/// program name.
inline int cli_entry(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("mctsbench");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    return cli_entry(static_cast<int>(argv.size()), argv.data());
}

}  // namespace mcts::bench
