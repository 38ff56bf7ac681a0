#pragma once

#include <cstdint>

#include "mcts/errors.hpp"
#include "mcts/mdp.hpp"

namespace mcts::domains {

enum class PylAction : std::uint8_t { roll = 0, stop = 1 };

inline const char* action_name(PylAction action) {
    return action == PylAction::roll ? "roll" : "stop";
}

/// Marked die faces plus the banked amount once the player stops.
struct PylState {
    std::uint8_t marked_faces = 0;  // bit f-1 set when face f is marked
    bool stopped = false;
    double banked = 0.0;
    bool operator==(const PylState&) const = default;
};

/**
 * Push-your-luck dice game, reconstructed to its defining characteristics:
 * two actions, stochastic transitions, infinite horizon. The player rolls a
 * six-sided die; an unmarked face becomes marked and the pot is the product
 * of all marked faces (empty pot is worth 0), while rolling an already marked
 * face clears every mark, losing the pot — the game goes on. Stopping banks
 * the pot and ends the episode; that banked amount is the only reward.
 */
class PushYourLuckMdp final : public MarkovDecisionProcess<PylState, PylAction> {
public:
    PylState transition(const PylState& state, const PylAction& action,
                        Rng& rng) const override {
        if (state.stopped)
            throw contract_violation("PushYourLuck transition: state is terminal");
        PylState next = state;
        if (action == PylAction::stop) {
            next.stopped = true;
            next.banked = pot(state.marked_faces);
            return next;
        }
        const auto face_bit = static_cast<std::uint8_t>(1u << uniform_index(6, rng));
        if (state.marked_faces & face_bit)
            next.marked_faces = 0;  // bust: marks cleared, play continues
        else
            next.marked_faces |= face_bit;
        return next;
    }

    double reward(const PylState*, const PylAction*, const PylState& state) const override {
        return state.stopped ? state.banked : 0.0;
    }

    PylState initial_state() const override { return {}; }

    bool is_terminal(const PylState& state) const override { return state.stopped; }

    std::vector<PylAction> actions(const PylState& state) const override {
        if (state.stopped) return {};
        return {PylAction::roll, PylAction::stop};
    }

    /// Product of the marked faces; 0 with nothing marked.
    static double pot(std::uint8_t marked_faces) {
        if (marked_faces == 0) return 0.0;
        double product = 1.0;
        for (int face = 1; face <= 6; ++face)
            if (marked_faces & (1u << (face - 1))) product *= face;
        return product;
    }
};

}  // namespace mcts::domains
