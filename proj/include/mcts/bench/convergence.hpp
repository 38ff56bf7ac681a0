#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mcts/bench/dispatch.hpp"

namespace mcts::bench {

/// Root-action statistics captured after one tree-search iteration.
struct ConvergenceRecord {
    std::uint32_t iteration = 0;
    std::string action;
    double exploration_term = 0.0;
    double mean_reward = 0.0;
    std::uint64_t visits = 0;
};

/**
 * Runs one seeded search and snapshots root_child_statistics after every
 * iteration: one record per (iteration, explored root action). The driver is
 * stepped one iteration at a time through the public API, mirroring how a
 * metrics-collecting solver extension would hook the loop.
 */
inline std::vector<ConvergenceRecord> export_convergence(const BenchmarkConfig& config) {
    config.validate();
    std::vector<ConvergenceRecord> records;
    with_domain(config, [&](const auto& mdp) {
        with_solver(mdp, config.solver, config.solver_config(), [&](auto& solver) {
            for (std::uint32_t iteration = 1; iteration <= config.iterations; ++iteration) {
                solver.run_tree_search(1);
                for (const auto& stat : solver.root_child_statistics()) {
                    records.push_back({iteration, action_name(stat.action),
                                       stat.exploration_term, stat.mean_reward,
                                       stat.visit_count});
                }
            }
        });
    });
    return records;
}

/// Columns: iteration, action, exploration_term, mean_reward, visits.
inline void write_convergence_file(const std::string& path,
                                   const std::vector<ConvergenceRecord>& records) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write convergence file: " + path);
    out << "iteration,action,exploration_term,mean_reward,visits\n";
    for (const auto& record : records) {
        char line[160];
        std::snprintf(line, sizeof line, "%u,%s,%.9g,%.9g,%llu\n", record.iteration,
                      record.action.c_str(), record.exploration_term, record.mean_reward,
                      static_cast<unsigned long long>(record.visits));
        out << line;
    }
    if (!out) throw io_error("failed writing convergence file: " + path);
}

inline std::vector<ConvergenceRecord> read_convergence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open convergence file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "iteration,action,exploration_term,mean_reward,visits")
        throw io_error("convergence file has an unexpected header: " + path);
    std::vector<ConvergenceRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream fields(line);
        ConvergenceRecord record;
        std::string token;
        std::getline(fields, token, ',');
        record.iteration = static_cast<std::uint32_t>(std::stoul(token));
        std::getline(fields, record.action, ',');
        std::getline(fields, token, ',');
        record.exploration_term = std::stod(token);
        std::getline(fields, token, ',');
        record.mean_reward = std::stod(token);
        std::getline(fields, token, ',');
        record.visits = std::stoull(token);
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace mcts::bench
