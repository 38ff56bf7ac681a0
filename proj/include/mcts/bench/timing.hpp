#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "mcts/bench/dispatch.hpp"

namespace mcts::bench {

/// Wall-clock runtime per decision over independent trials.
struct DecisionTimingResult {
    std::vector<double> trial_seconds;
    double mean = 0.0;
    double stddev = 0.0;
    std::string hardware_note;
};

/**
 * Runs `trials` independent decisions from the domain's initial state, a
 * fresh tree per decision, and reports wall-clock statistics. The clock spans
 * run_tree_search plus best_action only — domain and solver construction are
 * excluded — and one warm-up decision is executed and discarded first.
 */
inline DecisionTimingResult measure_decision_time(const BenchmarkConfig& config) {
    config.validate();
    DecisionTimingResult result;
    result.trial_seconds.reserve(config.trials);

    with_domain(config, [&](const auto& mdp) {
        for (std::uint32_t trial = 0; trial <= config.trials; ++trial) {
            SolverConfig solver_config = config.solver_config();
            solver_config.rng_seed = config.seed + trial;
            with_solver(mdp, config.solver, solver_config, [&](auto& solver) {
                const auto start = std::chrono::steady_clock::now();
                solver.run_tree_search();
                (void)solver.best_action();
                const auto stop = std::chrono::steady_clock::now();
                if (trial > 0)  // trial 0 is the discarded warm-up
                    result.trial_seconds.push_back(
                        std::chrono::duration<double>(stop - start).count());
            });
        }
    });

    double sum = 0.0;
    for (double s : result.trial_seconds) sum += s;
    result.mean = sum / static_cast<double>(result.trial_seconds.size());
    double variance = 0.0;
    for (double s : result.trial_seconds) variance += (s - result.mean) * (s - result.mean);
    result.stddev = result.trial_seconds.size() > 1
                        ? std::sqrt(variance / static_cast<double>(result.trial_seconds.size() - 1))
                        : 0.0;
    result.hardware_note = std::to_string(std::thread::hardware_concurrency()) +
                           " hardware threads; timing covers tree search and action extraction "
                           "only (construction excluded, one warm-up decision discarded)";
    return result;
}

/// Columns: trial, seconds. No footer; statistics go to standard output.
inline void write_timing_file(const std::string& path, const DecisionTimingResult& result) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write timing file: " + path);
    out << "trial,seconds\n";
    for (std::size_t i = 0; i < result.trial_seconds.size(); ++i) {
        char line[64];
        std::snprintf(line, sizeof line, "%zu,%.9f\n", i, result.trial_seconds[i]);
        out << line;
    }
    if (!out) throw io_error("failed writing timing file: " + path);
}

}  // namespace mcts::bench
