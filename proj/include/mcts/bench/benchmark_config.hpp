#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mcts/errors.hpp"
#include "mcts/solver_config.hpp"

namespace mcts::bench {

enum class DomainId { gridworld, pyl, g2048, connect4, reversi };

enum class SolverVariant { generic, stateful };

inline DomainId parse_domain(const std::string& name) {
    if (name == "gridworld") return DomainId::gridworld;
    if (name == "pyl") return DomainId::pyl;
    if (name == "2048") return DomainId::g2048;
    if (name == "connect4") return DomainId::connect4;
    if (name == "reversi") return DomainId::reversi;
    throw config_error("unknown domain: " + name +
                       " (expected gridworld|pyl|2048|connect4|reversi)");
}

inline const char* domain_name(DomainId domain) {
    switch (domain) {
        case DomainId::gridworld: return "gridworld";
        case DomainId::pyl: return "pyl";
        case DomainId::g2048: return "2048";
        case DomainId::connect4: return "connect4";
        case DomainId::reversi: return "reversi";
    }
    return "?";
}

inline SolverVariant parse_solver(const std::string& name) {
    if (name == "generic") return SolverVariant::generic;
    if (name == "stateful") return SolverVariant::stateful;
    throw config_error("unknown solver variant: " + name + " (expected generic|stateful)");
}

/// Everything a benchmark run needs. CLI flags map onto these fields.
struct BenchmarkConfig {
    DomainId domain = DomainId::gridworld;
    SolverVariant solver = SolverVariant::generic;
    std::uint32_t iterations = 500;
    std::uint32_t depth_limit = 1000;
    double exploration_c = 1.0;
    double discount = 0.9;
    std::uint64_t seed = 0;
    std::uint32_t trials = 100;
    std::uint32_t games = 200;
    std::uint32_t workers = 0;  // 0 = hardware concurrency
    bool fixed_colors = false;
    double gridworld_noise = 0.2;
    std::optional<std::string> layout_path;
    std::optional<std::string> heuristic_table_path;
    std::string out_path;

    SolverConfig solver_config() const {
        SolverConfig config;
        config.exploration_constant = exploration_c;
        config.reward_discount_factor = discount;
        config.simulation_depth_limit = depth_limit;
        config.iteration_budget = iterations;
        config.rng_seed = seed;
        return config;
    }

    void validate() const {
        solver_config().validate();
        if (trials < 1) throw config_error("BenchmarkConfig: trials must be >= 1");
        if (games < 1) throw config_error("BenchmarkConfig: games must be >= 1");
    }
};

}  // namespace mcts::bench
