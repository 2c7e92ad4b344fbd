#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "teamcomp/model.hpp"
#include "teamcomp/solver.hpp"

namespace teamcomp {

// ---- Structure -------------------------------------------------------------

// Player i of `team` is weaker than teammate j: for every opponent, i's win
// probability is <= j's.
bool weaker(const GameSpec& spec, Team team, int i, int j);

struct TeamClassification {
  std::vector<bool> weakest;    // weaker than every teammate
  std::vector<bool> dominated;  // never wins against anyone
  bool transitive = false;
  // Weakest first: chain[0] <= chain[1] <= ... Only meaningful when
  // transitive.
  std::vector<int> chain;

  // Strongest `count` players by the chain, i.e. its last `count` entries.
  PlayerSet top(int count) const;
};

struct PlayerClassification {
  TeamClassification team1;
  TeamClassification team2;

  const TeamClassification& of(Team t) const { return t == Team::kOne ? team1 : team2; }
};

PlayerClassification classify(const GameSpec& spec);

// ---- Abandonment and recruiting --------------------------------------------

// Removes `players` (a mask over the team's indices) from `team`. Throws
// Error{kSize} when fewer than T players remain.
GameSpec abandon(const GameSpec& spec, Team team, PlayerSet players);

// Change of `team`'s own utility caused by keeping rather than abandoning
// `players`: positive means they were helping.
Rational abandonment_delta(const GameSpec& spec, Team team, PlayerSet players, const SolveOptions& options = {});

// Appends `count` all-zero rows (players who never win) to Team 1.
GameSpec add_dominated(const GameSpec& spec, int count);

// ---- Threshold games -------------------------------------------------------

struct GammaParams {
  int C = 1;
  int a = 0;
  int b = 0;
};

// C >= 1, 0 <= a <= ceil(C/2), 0 <= b <= floor(C/2).
bool gamma_params_valid(const GammaParams& p);
int gamma_rounds(const GammaParams& p);
int gamma_team_size(const GammaParams& p);
int gamma_threshold(const GammaParams& p);

// m = n = (C-a) + (floor(C/2)-b), T = C-a-b, P[i][i] = 1 for i < C-a and 0
// elsewhere; Team 1 gets 1 for at least ceil(C/2)-a wins, else -1. Throws
// Error{kParams} on invalid parameters and Error{kSize} for the corner
// a = ceil(C/2), b = floor(C/2), which has no rounds.
GameSpec gamma_game(const GammaParams& p);

// Value of the threshold game, including the zero-round corner.
Rational gamma_value(const GammaParams& p, const SolveOptions& options = {});

// ---- Checkers --------------------------------------------------------------

// Machine-readable checker output. `pass` is the conjunction of `claims`;
// failing claims leave witnesses behind.
struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::map<std::string, bool> claims;
  std::vector<nlohmann::json> witnesses;
  std::map<std::string, Rational> values;

  // Records a sub-claim; `ok` is ANDed into any earlier result of the same
  // name.
  void claim(const std::string& name, bool ok);
  void claim(const std::string& name, bool ok, nlohmann::json witness);
  // Folds another report's claims, witnesses and values in under `prefix`.
  void merge(const Report& other, const std::string& prefix);
  nlohmann::json to_json() const;
};

// Uniform play certifies as an equilibrium at every class. Throws
// Error{kRedundant} unless m == n == T.
Report check_theorem1(const GameSpec& spec, const SolveOptions& options = {});

// With Team 1 uniform, every enumerated Team 2 pure strategy induces each
// complete matching with probability 1/T!. Throws Error{kRedundant}.
Report check_lemma2(const GameSpec& spec, std::uint64_t enumeration_budget = kDefaultEnumerationBudget);

// For each transitive team: the value survives abandoning its non-top-T
// players, and at every class the rank-(T-k) top player's row (column)
// dominates every non-top player's. When both teams are transitive, uniform
// play over the top T is checked as an equilibrium. Throws Error{kPrecond}
// for non-monotone utility or when neither team is transitive.
Report check_theorem2(const GameSpec& spec, const SolveOptions& options = {});

struct Lemma5Options {
  int max_rounds = 3;
  int max_team1 = 5;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

// Meeting probabilities under uniform Team 2 never exceed 1/T. Within the
// caps every Team 1 strategy is covered: exactly, by maximizing each Q[i][j]
// over all strategies, and literally, by enumerating pure strategies when
// their count fits the budget. Beyond the caps only the uniform and
// equilibrium strategies are checked. Throws Error{kPrecond} unless n == T.
Report check_lemma5(const GameSpec& spec, const Lemma5Options& lemma5 = {}, const SolveOptions& options = {});

// m > n == T and every A_i with i >= T weaker than every A_j with j < T.
// Passes iff the value equals the value without the tail. Utility other than
// expected-wins is reported, not rejected, so the majority-utility contrast
// can be observed. Throws Error{kPrecond} on the structural conditions.
Report check_theorem3(const GameSpec& spec, const Lemma5Options& lemma5 = {}, const SolveOptions& options = {});

enum class UtilityKind { kExpectedWins, kMajority };

// Recruiting dominated players into the diagonal bases. Throws
// Error{kPrecond} for T < 2.
Report check_theorem4(int rounds, UtilityKind kind, const SolveOptions& options = {});

// Every threshold game with C <= c_max has value > -1, value 1 when
// a = ceil(C/2), and root diagonal cells equal the matching smaller games.
Report check_lemma6(int c_max, const SolveOptions& options = {});

}  // namespace teamcomp
