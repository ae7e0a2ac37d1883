#pragma once

#include <cstdint>
#include <string>

#include "rtsolve/treeplex.hpp"

namespace rtsolve {

enum class GameKind { Matrix, Kuhn, Leduc, Goofspiel, LiarsDice };

// Parsed from CLI ids: matrix:<n>x<m>:<seed>, kuhn:<n>, leduc:<n>,
// goofspiel:<k>, liarsdice:<k>.
struct GameSpec {
    GameKind kind = GameKind::Matrix;
    int n = 0;          // rows / card count / ranks / die sides
    int m = 0;          // matrix columns
    uint64_t seed = 0;  // matrix only

    static GameSpec parse(const std::string& id);
    std::string id() const;
};

struct GameStats {
    long long infosets = 0;   // summed over both players
    long long sequences = 0;  // summed over both players, incl. both empty sequences
    long long leaves = 0;     // payoff entries
};

GameForm build_matrix_game(int n, int m, uint64_t seed);
GameForm build_kuhn(int n);
GameForm build_leduc(int n);
GameForm build_goofspiel(int k);
GameForm build_liars_dice(int k);

GameForm build_game(const GameSpec& spec);
GameStats game_stats(const GameForm& g);

}  // namespace rtsolve
