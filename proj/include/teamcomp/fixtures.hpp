#pragma once

#include <string_view>

#include "teamcomp/model.hpp"

namespace teamcomp {

// Three-card suit-matching game: m = n = T = 3, majority utility.
GameSpec card_game();

// m = T = 2, n = 3, P = [[0,0,1],[1,1,0]], expected-wins utility. Uniform
// play is not an equilibrium for Team 1 despite m == T.
GameSpec redundant_column_game();

// m = n = 3, T = 2, P = diag(1, 1, 0), expected-wins utility. A_3 is
// dominated yet helps Team 1.
GameSpec dominated_helper_game();

// m = 4, n = T = 3, P = identity stacked on an all-zero row.
GameSpec diagonal_plus_dominated_game(const UtilityTable& utility);

// m = T, n = T + extra, P[i][j] = 1 iff i == j. With extra = T - 1 and
// expected-wins utility this is the base for recruiting T - 2, T - 1 or T
// dominated players; with extra = floor(T/2) and majority utility the base
// for floor(T/2) - 1 .. floor(T/2) + 1.
GameSpec diagonal_recruit_base(int rounds, int extra, const UtilityTable& utility);
GameSpec expected_wins_recruit_base(int rounds);
GameSpec majority_recruit_base(int rounds);

// Resolves a fixture name: card, ex1, ex2, ex3, ex4:T, ex5:T. Throws
// Error{kParse} on an unknown name.
GameSpec named_fixture(std::string_view name);

}  // namespace teamcomp
