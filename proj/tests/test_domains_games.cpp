#include <cmath>
#include <set>

#include "doctest.h"
#include "mcts/domains/game_2048.hpp"
#include "mcts/domains/push_your_luck.hpp"

using namespace mcts;
using namespace mcts::domains;

// ------------------------------------------------------------ push your luck

TEST_CASE("stopping banks the pot; an empty pot is worth nothing") {
    const PushYourLuckMdp mdp;
    Rng rng(1);
    const PylState stopped = mdp.transition({}, PylAction::stop, rng);
    CHECK(stopped.stopped);
    CHECK(mdp.is_terminal(stopped));
    CHECK(mdp.reward(nullptr, nullptr, stopped) == doctest::Approx(0.0));
    CHECK(mdp.actions(stopped).empty());

    PylState rich;
    rich.marked_faces = 0b000110;  // faces 2 and 3
    const PylState banked = mdp.transition(rich, PylAction::stop, rng);
    CHECK(mdp.reward(nullptr, nullptr, banked) == doctest::Approx(6.0));
}

TEST_CASE("rolling a marked face clears the pot but the game goes on") {
    const PushYourLuckMdp mdp;
    PylState all_marked;
    all_marked.marked_faces = 0b111111;
    Rng rng(3);
    const PylState bust = mdp.transition(all_marked, PylAction::roll, rng);
    CHECK(bust.marked_faces == 0);
    CHECK_FALSE(bust.stopped);
    CHECK_FALSE(mdp.is_terminal(bust));
    CHECK(mdp.actions(bust).size() == 2);
    CHECK(PushYourLuckMdp::pot(bust.marked_faces) == doctest::Approx(0.0));
}

TEST_CASE("one roll from empty marks lands each face equally") {
    const PushYourLuckMdp mdp;
    Rng rng(99);
    const int samples = 60000;
    double pot_total = 0.0;
    std::array<int, 6> face_counts{};
    for (int i = 0; i < samples; ++i) {
        const PylState next = mdp.transition({}, PylAction::roll, rng);
        REQUIRE(next.marked_faces != 0);
        int face = 0;
        for (int f = 1; f <= 6; ++f)
            if (next.marked_faces & (1u << (f - 1))) face = f;
        ++face_counts[face - 1];
        pot_total += PushYourLuckMdp::pot(next.marked_faces);
    }
    // Expected pot after one roll: (1+2+3+4+5+6)/6 = 3.5.
    CHECK(pot_total / samples == doctest::Approx(3.5).epsilon(0.02));
    for (int count : face_counts) CHECK(std::abs(count / double(samples) - 1.0 / 6) < 0.01);
}

TEST_CASE("push-your-luck random walk never deadlocks") {
    const PushYourLuckMdp mdp;
    Rng rng(7);
    PylState state;
    for (int step = 0; step < 10000; ++step) {
        if (mdp.is_terminal(state)) {
            CHECK(mdp.actions(state).empty());
            state = mdp.initial_state();
            continue;
        }
        const auto actions = mdp.actions(state);
        REQUIRE(actions.size() == 2);
        CHECK(actions[0] == PylAction::roll);
        CHECK(actions[1] == PylAction::stop);
        state = mdp.transition(state, actions[uniform_index(actions.size(), rng)], rng);
    }
}

// --------------------------------------------------------------------- 2048

namespace {

State2048 board_from_rows(const std::array<std::array<int, 4>, 4>& rows) {
    State2048 state;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) state.set_exponent(x, y, static_cast<std::uint8_t>(rows[y][x]));
    return state;
}

}  // namespace

TEST_CASE("sliding merges equal tiles once and scores the merge") {
    // Row [2,2,0,0] slides left into [4,0,0,0], scoring 4.
    const State2048 before = board_from_rows({{{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
    const State2048 after = Game2048Mdp::slide(before, Move2048::left);
    CHECK(after.exponent(0, 0) == 2);
    CHECK(after.exponent(1, 0) == 0);
    CHECK(after.score == 4);

    // [4,2,2,0] -> [4,4,0,0]: the pair merges, the leading tile does not cascade.
    const State2048 row = board_from_rows({{{2, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
    const State2048 slid = Game2048Mdp::slide(row, Move2048::left);
    CHECK(slid.exponent(0, 0) == 2);
    CHECK(slid.exponent(1, 0) == 2);
    CHECK(slid.exponent(2, 0) == 0);
    CHECK(slid.score == 4);

    // [2,2,2,2] -> [4,4,0,0]: two independent merges.
    const State2048 quad = board_from_rows({{{1, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
    const State2048 merged = Game2048Mdp::slide(quad, Move2048::left);
    CHECK(merged.exponent(0, 0) == 2);
    CHECK(merged.exponent(1, 0) == 2);
    CHECK(merged.score == 8);
}

TEST_CASE("only board-changing moves are offered") {
    const Game2048Mdp mdp;
    // A single tile in the top-left corner: left and up are no-ops.
    const State2048 corner = board_from_rows({{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
    const auto actions = mdp.actions(corner);
    std::set<Move2048> offered(actions.begin(), actions.end());
    CHECK(offered.count(Move2048::down) == 1);
    CHECK(offered.count(Move2048::right) == 1);
    CHECK(offered.count(Move2048::up) == 0);
    CHECK(offered.count(Move2048::left) == 0);

    Rng rng(5);
    CHECK_THROWS_AS(mdp.transition(corner, Move2048::up, rng), contract_violation);
}

TEST_CASE("a jammed board is terminal") {
    const Game2048Mdp mdp;
    const State2048 jammed = board_from_rows({{{1, 2, 1, 2}, {2, 1, 2, 1}, {1, 2, 1, 2}, {2, 1, 2, 1}}});
    CHECK(mdp.is_terminal(jammed));
    CHECK(mdp.actions(jammed).empty());

    // One merge pair keeps it alive.
    const State2048 alive = board_from_rows({{{1, 1, 1, 2}, {2, 1, 2, 1}, {1, 2, 1, 2}, {2, 1, 2, 1}}});
    CHECK_FALSE(mdp.is_terminal(alive));
}

TEST_CASE("spawns are 90/10 twos and fours over uniformly random empty cells") {
    const Game2048Mdp mdp;
    Rng rng(2048);
    const State2048 start = mdp.initial_state();
    const int samples = 10000;
    int twos = 0, fours = 0;
    for (int i = 0; i < samples; ++i) {
        const State2048 next = mdp.transition(start, mdp.actions(start)[0], rng);
        int new_twos = 0, new_fours = 0;
        for (int y = 0; y < 4; ++y)
            for (int x = 0; x < 4; ++x) {
                if (next.exponent(x, y) == 1) ++new_twos;
                if (next.exponent(x, y) == 2) ++new_fours;
            }
        // The start board holds two 2-tiles that slide without merging, so
        // the spawn is either a third 2 or a single 4.
        REQUIRE(((new_twos == 3 && new_fours == 0) || (new_twos == 2 && new_fours == 1)));
        if (new_twos == 3) ++twos;
        if (new_fours == 1) ++fours;
    }
    CHECK(twos + fours == samples);
    CHECK(std::abs(twos / double(samples) - 0.9) < 0.01);
    CHECK(std::abs(fours / double(samples) - 0.1) < 0.01);
}

TEST_CASE("2048 reward is the normalized score") {
    const Game2048Mdp mdp(1024.0);
    State2048 state;
    state.score = 512;
    CHECK(mdp.reward(nullptr, nullptr, state) == doctest::Approx(0.5));
    CHECK_THROWS_AS(Game2048Mdp(-1.0), config_error);
}

TEST_CASE("2048 random walk: fuzz the contract for 10^4 steps") {
    const Game2048Mdp mdp;
    Rng rng(11);
    State2048 state = mdp.initial_state();
    std::uint32_t last_score = 0;
    for (int step = 0; step < 10000; ++step) {
        if (mdp.is_terminal(state)) {
            CHECK(mdp.actions(state).empty());
            state = mdp.initial_state();
            last_score = 0;
            continue;
        }
        const auto actions = mdp.actions(state);
        REQUIRE_FALSE(actions.empty());
        // Offered moves really change the board.
        for (const auto a : actions) CHECK(Game2048Mdp::slide(state, a).board != state.board);
        state = mdp.transition(state, actions[uniform_index(actions.size(), rng)], rng);
        CHECK(state.score >= last_score);  // merge score never decreases
        last_score = state.score;
    }
}
