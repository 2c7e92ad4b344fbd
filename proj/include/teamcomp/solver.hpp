#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "teamcomp/matrix_game.hpp"
#include "teamcomp/model.hpp"

namespace teamcomp {

inline constexpr std::uint64_t kDefaultClassBudget = 50'000'000;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

struct SolveOptions {
  // Abort with Error{kBudget} when the class count exceeds this.
  std::uint64_t class_budget = kDefaultClassBudget;
};

// sum over k = 0..T of C(m,k) * C(n,k) * (k+1).
std::uint64_t class_count(const GameSpec& spec);

// Values and one subgame-perfect equilibrium (an SPE, not a canonical one)
// for every history class of a game.
struct SolveResult {
  GameSpec spec;
  ClassMap<Rational> values;
  BehavioralStrategy strategy1{Team::kOne, {}};
  BehavioralStrategy strategy2{Team::kTwo, {}};
  Rational root_value;

  const Rational& value(const ClassKey& key) const;
};

// One-round matrix game at a non-terminal class. Rows are Team 1's unplayed
// players ascending, columns Team 2's. `values` must hold every class one
// level below `key`. Throws Error{kTerminal} when |X| == T.
MatrixGame stage_matrix(const GameSpec& spec, const ClassMap<Rational>& values, const ClassKey& key);

// Backward induction over all C(m,k)C(n,k)(k+1) classes, level T down to 0.
SolveResult solve(const GameSpec& spec, const SolveOptions& options = {});

// Team 1's expected utility when `fixed.team` plays `fixed` and the other
// team best-responds at every class. Throws Error{kCoverage} when `fixed`
// misses a class reachable under its own support.
Rational evaluate_fixed(const GameSpec& spec, const BehavioralStrategy& fixed);

// Team 1's exact expected utility when both strategies are played.
Rational evaluate_profile(const GameSpec& spec, const BehavioralStrategy& s1, const BehavioralStrategy& s2);

// Builds a strategy for `team` by evaluating `rule` at every non-terminal
// class of the game.
BehavioralStrategy build_strategy(const GameSpec& spec, Team team, const std::function<Mixture(const ClassKey&)>& rule);

// Uniform over the team's unplayed players at every class.
BehavioralStrategy uniform_strategy(const GameSpec& spec, Team team);

// A complete matching when m == n == T: partner[i] is the Team 2 player A_i
// faced.
using Matching = std::vector<int>;

// Exact probability of each complete matching, marginalizing over match
// outcomes. Throws Error{kRedundant} unless m == n == T.
std::map<Matching, Rational> matching_distribution(const GameSpec& spec, const BehavioralStrategy& s1,
                                                   const BehavioralStrategy& s2);

// Q[i][j] = probability that A_i and B_j play each other.
std::vector<std::vector<Rational>> meeting_probabilities(const GameSpec& spec, const BehavioralStrategy& s1,
                                                         const BehavioralStrategy& s2);

// max over all Team 1 strategies (history-dependent allowed) of the
// probability that A_i meets B_j while Team 2 plays `s2`.
Rational max_meeting_probability(const GameSpec& spec, const BehavioralStrategy& s2, int i, int j);

// Number of class-based pure strategies for `team` restricted to the classes
// reachable under them (every opponent move and both outcomes count as
// reachable). Throws Error{kBudget} once the count passes `budget`.
std::uint64_t count_pure_strategies(const GameSpec& spec, Team team, std::uint64_t budget = kDefaultEnumerationBudget);

// Calls `visit` once per strategy counted by count_pure_strategies. Throws
// Error{kBudget} before visiting anything if the count exceeds `budget`.
void enumerate_pure_strategies(const GameSpec& spec, Team team, const std::function<void(const PureAdaptiveStrategy&)>& visit,
                               std::uint64_t budget = kDefaultEnumerationBudget);

struct SimulationEstimate {
  std::uint64_t samples = 0;
  double mean = 0.0;
  double standard_error = 0.0;
};

// Plays `samples` independent competitions of s1 vs s2 with floating-point
// sampling and returns Team 1's mean utility.
SimulationEstimate simulate(const GameSpec& spec, const BehavioralStrategy& s1, const BehavioralStrategy& s2,
                            std::uint64_t samples, std::uint64_t seed);

}  // namespace teamcomp
