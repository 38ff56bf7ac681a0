#include "mcts/bench/cli.hpp"

int main(int argc, char** argv) { return mcts::bench::cli_entry(argc, argv); }
