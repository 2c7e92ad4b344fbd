#include "teamcomp/solver.hpp"

#include <cmath>
#include <set>
#include <string>
#include <tuple>

#include "teamcomp/random.hpp"

namespace teamcomp {
namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

ClassKey advance(const ClassKey& key, int a, int b, bool team1_wins) {
  return ClassKey{with(key.played1, a), with(key.played2, b), key.wins + (team1_wins ? 1 : 0)};
}

// Drops zero weights and pairs the remaining ones with player indices.
Mixture to_mixture(const std::vector<int>& players, const std::vector<Rational>& weights) {
  Mixture out;
  for (std::size_t k = 0; k < players.size(); ++k) {
    if (weights[k].sign() != 0) out.emplace_back(players[k], weights[k]);
  }
  return out;
}

const Mixture& require_mixture(const GameSpec& spec, const BehavioralStrategy& s, const ClassKey& key) {
  const Mixture* mix = s.find(key);
  if (mix == nullptr) {
    throw Error(ErrorCode::kCoverage, "team " + std::to_string(team_number(s.team)) +
                                          " strategy has no move at class with " + std::to_string(key.level()) +
                                          " rounds played");
  }
  check_mixture(spec, s.team, key, *mix);
  return *mix;
}

void require_team(const BehavioralStrategy& s, Team team) {
  if (s.team != team) {
    throw Error(ErrorCode::kCoverage, "expected a team " + std::to_string(team_number(team)) + " strategy");
  }
}

class FixedEvaluator {
 public:
  FixedEvaluator(const GameSpec& spec, const BehavioralStrategy& fixed) : spec_(spec), fixed_(fixed) {}

  Rational eval(const ClassKey& key) {
    if (key.level() == spec_.rounds) return spec_.utility.at(key.wins);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Mixture& mix = require_mixture(spec_, fixed_, key);
    const Team free = opponent(fixed_.team);
    const bool maximize = free == Team::kOne;
    Rational best;
    bool first = true;
    for (int o : unplayed(key.played(free), spec_.team_size(free))) {
      Rational expected;
      for (const auto& [f, weight] : mix) {
        const int a = fixed_.team == Team::kOne ? f : o;
        const int b = fixed_.team == Team::kOne ? o : f;
        const Rational& p = spec_.strength.at(a, b);
        Rational v;
        if (p.sign() != 0) v += p * eval(advance(key, a, b, true));
        if (p != 1) v += (Rational(1) - p) * eval(advance(key, a, b, false));
        expected += weight * v;
      }
      if (first || (maximize ? expected > best : expected < best)) best = std::move(expected);
      first = false;
    }
    memo_.emplace(key, best);
    return best;
  }

 private:
  const GameSpec& spec_;
  const BehavioralStrategy& fixed_;
  ClassMap<Rational> memo_;
};

class MeetingMaximizer {
 public:
  MeetingMaximizer(const GameSpec& spec, const BehavioralStrategy& s2, int i, int j)
      : spec_(spec), s2_(s2), i_(i), j_(j) {}

  Rational eval(const ClassKey& key) {
    if (key.level() == spec_.rounds || contains(key.played1, i_) || contains(key.played2, j_)) return Rational(0);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Mixture& mix = require_mixture(spec_, s2_, key);
    Rational best;
    for (int a : unplayed(key.played1, spec_.m())) {
      Rational v;
      for (const auto& [b, weight] : mix) {
        if (a == i_ && b == j_) {
          v += weight;
        } else if (a != i_ && b != j_) {
          const Rational& p = spec_.strength.at(a, b);
          Rational cont;
          if (p.sign() != 0) cont += p * eval(advance(key, a, b, true));
          if (p != 1) cont += (Rational(1) - p) * eval(advance(key, a, b, false));
          v += weight * cont;
        }
      }
      best = max(best, v);
    }
    memo_.emplace(key, best);
    return best;
  }

 private:
  const GameSpec& spec_;
  const BehavioralStrategy& s2_;
  int i_;
  int j_;
  ClassMap<Rational> memo_;
};

struct ClassOrder {
  bool operator()(const ClassKey& x, const ClassKey& y) const {
    return std::make_tuple(x.level(), x.played1, x.played2, x.wins) <
           std::make_tuple(y.level(), y.played1, y.played2, y.wins);
  }
};

// Depth-first walk over class-based pure strategies. Decisions are taken in
// level order, so a class is decided before any of its successors appear.
class PureEnumerator {
 public:
  PureEnumerator(const GameSpec& spec, Team team, std::uint64_t budget,
                 const std::function<void(const PureAdaptiveStrategy&)>* visit)
      : spec_(spec), team_(team), budget_(budget), visit_(visit) {
    current_.team = team;
  }

  std::uint64_t run() {
    if (spec_.rounds == 0) return 1;
    recurse({ClassKey{}});
    return count_;
  }

 private:
  void recurse(std::set<ClassKey, ClassOrder> pending) {
    if (pending.empty()) {
      if (++count_ > budget_) {
        throw Error(ErrorCode::kBudget, "pure strategy enumeration exceeds " + std::to_string(budget_));
      }
      if (visit_ != nullptr) (*visit_)(current_);
      return;
    }
    const ClassKey key = *pending.begin();
    pending.erase(pending.begin());
    const Team other = opponent(team_);
    const auto opponents = unplayed(key.played(other), spec_.team_size(other));
    for (int choice : unplayed(key.played(team_), spec_.team_size(team_))) {
      current_.moves[key] = choice;
      auto next = pending;
      if (key.level() + 1 < spec_.rounds) {
        for (int o : opponents) {
          const int a = team_ == Team::kOne ? choice : o;
          const int b = team_ == Team::kOne ? o : choice;
          next.insert(advance(key, a, b, false));
          next.insert(advance(key, a, b, true));
        }
      }
      recurse(std::move(next));
    }
    current_.moves.erase(key);
  }

  const GameSpec& spec_;
  Team team_;
  std::uint64_t budget_;
  const std::function<void(const PureAdaptiveStrategy&)>* visit_;
  PureAdaptiveStrategy current_;
  std::uint64_t count_ = 0;
};

std::size_t sample_index(const Mixture& mix, Rng& rng) {
  double u = rng.unit();
  for (std::size_t k = 0; k + 1 < mix.size(); ++k) {
    u -= mix[k].second.to_double();
    if (u < 0) return k;
  }
  return mix.size() - 1;
}

}  // namespace

std::uint64_t class_count(const GameSpec& spec) {
  std::uint64_t total = 0;
  for (int k = 0; k <= spec.rounds; ++k) {
    total += binomial(spec.m(), k) * binomial(spec.n(), k) * static_cast<std::uint64_t>(k + 1);
  }
  return total;
}

const Rational& SolveResult::value(const ClassKey& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw Error(ErrorCode::kIndex, "class not present in value table");
  return it->second;
}

MatrixGame stage_matrix(const GameSpec& spec, const ClassMap<Rational>& values, const ClassKey& key) {
  if (key.level() >= spec.rounds) throw Error(ErrorCode::kTerminal, "stage matrix requested at a terminal class");
  const auto rows = unplayed(key.played1, spec.m());
  const auto cols = unplayed(key.played2, spec.n());
  std::vector<Rational> cells;
  cells.reserve(rows.size() * cols.size());
  for (int a : rows) {
    for (int b : cols) {
      const Rational& p = spec.strength.at(a, b);
      const auto win = values.find(advance(key, a, b, true));
      const auto lose = values.find(advance(key, a, b, false));
      if (win == values.end() || lose == values.end()) {
        throw Error(ErrorCode::kIndex, "value table is missing a successor class");
      }
      cells.push_back(win->second * p + lose->second * (Rational(1) - p));
    }
  }
  return MatrixGame(static_cast<int>(rows.size()), static_cast<int>(cols.size()), std::move(cells));
}

SolveResult solve(const GameSpec& input, const SolveOptions& options) {
  const GameSpec spec = validate_spec(input).spec;
  const std::uint64_t classes = class_count(spec);
  if (classes > options.class_budget) {
    throw Error(ErrorCode::kBudget, std::to_string(classes) + " history classes exceed the budget of " +
                                        std::to_string(options.class_budget));
  }
  SolveResult result;
  result.spec = spec;
  result.values.reserve(static_cast<std::size_t>(classes));
  const int m = spec.m();
  const int n = spec.n();
  for (int k = spec.rounds; k >= 0; --k) {
    for_each_subset(m, k, [&](PlayerSet x) {
      for_each_subset(n, k, [&](PlayerSet y) {
        for (int w = 0; w <= k; ++w) {
          const ClassKey key{x, y, w};
          if (k == spec.rounds) {
            result.values.emplace(key, spec.utility.at(w));
            continue;
          }
          const MatrixSolution sol = solve_matrix(stage_matrix(spec, result.values, key));
          result.values.emplace(key, sol.value);
          result.strategy1.moves.emplace(key, to_mixture(unplayed(x, m), sol.row_strategy));
          result.strategy2.moves.emplace(key, to_mixture(unplayed(y, n), sol.col_strategy));
        }
      });
    });
  }
  result.root_value = result.values.at(ClassKey{});
  return result;
}

Rational evaluate_fixed(const GameSpec& spec, const BehavioralStrategy& fixed) {
  FixedEvaluator evaluator(spec, fixed);
  return evaluator.eval(ClassKey{});
}

BehavioralStrategy build_strategy(const GameSpec& spec, Team team, const std::function<Mixture(const ClassKey&)>& rule) {
  BehavioralStrategy s;
  s.team = team;
  for (int k = 0; k < spec.rounds; ++k) {
    for_each_subset(spec.m(), k, [&](PlayerSet x) {
      for_each_subset(spec.n(), k, [&](PlayerSet y) {
        for (int w = 0; w <= k; ++w) {
          const ClassKey key{x, y, w};
          s.moves.emplace(key, rule(key));
        }
      });
    });
  }
  return s;
}

BehavioralStrategy uniform_strategy(const GameSpec& spec, Team team) {
  return build_strategy(spec, team, [&](const ClassKey& key) {
    const auto avail = unplayed(key.played(team), spec.team_size(team));
    const Rational weight(1, static_cast<long>(avail.size()));
    Mixture mix;
    for (int p : avail) mix.emplace_back(p, weight);
    return mix;
  });
}

std::map<Matching, Rational> matching_distribution(const GameSpec& spec, const BehavioralStrategy& s1,
                                                   const BehavioralStrategy& s2) {
  if (spec.m() != spec.rounds || spec.n() != spec.rounds) {
    throw Error(ErrorCode::kRedundant, "matching distribution requires m == n == T");
  }
  require_team(s1, Team::kOne);
  require_team(s2, Team::kTwo);
  using State = std::pair<Matching, int>;
  std::map<State, Rational> frontier;
  frontier.emplace(State{Matching(static_cast<std::size_t>(spec.m()), -1), 0}, Rational(1));
  for (int round = 0; round < spec.rounds; ++round) {
    std::map<State, Rational> next;
    for (const auto& [state, mass] : frontier) {
      const auto& [partner, wins] = state;
      ClassKey key{0, 0, wins};
      for (std::size_t a = 0; a < partner.size(); ++a) {
        if (partner[a] >= 0) {
          key.played1 = with(key.played1, static_cast<int>(a));
          key.played2 = with(key.played2, partner[a]);
        }
      }
      const Mixture& mix1 = require_mixture(spec, s1, key);
      const Mixture& mix2 = require_mixture(spec, s2, key);
      for (const auto& [a, wa] : mix1) {
        for (const auto& [b, wb] : mix2) {
          Matching m = partner;
          m[static_cast<std::size_t>(a)] = b;
          const Rational joint = mass * wa * wb;
          const Rational& p = spec.strength.at(a, b);
          if (p.sign() != 0) next[State{m, wins + 1}] += joint * p;
          if (p != 1) next[State{m, wins}] += joint * (Rational(1) - p);
        }
      }
    }
    frontier = std::move(next);
  }
  std::map<Matching, Rational> out;
  for (const auto& [state, mass] : frontier) out[state.first] += mass;
  return out;
}

std::vector<std::vector<Rational>> meeting_probabilities(const GameSpec& spec, const BehavioralStrategy& s1,
                                                         const BehavioralStrategy& s2) {
  require_team(s1, Team::kOne);
  require_team(s2, Team::kTwo);
  std::vector<std::vector<Rational>> q(static_cast<std::size_t>(spec.m()),
                                       std::vector<Rational>(static_cast<std::size_t>(spec.n())));
  ClassMap<Rational> frontier;
  frontier.emplace(ClassKey{}, Rational(1));
  for (int round = 0; round < spec.rounds; ++round) {
    ClassMap<Rational> next;
    for (const auto& [key, mass] : frontier) {
      const Mixture& mix1 = require_mixture(spec, s1, key);
      const Mixture& mix2 = require_mixture(spec, s2, key);
      for (const auto& [a, wa] : mix1) {
        for (const auto& [b, wb] : mix2) {
          const Rational joint = mass * wa * wb;
          q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += joint;
          if (round + 1 == spec.rounds) continue;
          const Rational& p = spec.strength.at(a, b);
          if (p.sign() != 0) next[advance(key, a, b, true)] += joint * p;
          if (p != 1) next[advance(key, a, b, false)] += joint * (Rational(1) - p);
        }
      }
    }
    frontier = std::move(next);
  }
  return q;
}

Rational evaluate_profile(const GameSpec& spec, const BehavioralStrategy& s1, const BehavioralStrategy& s2) {
  require_team(s1, Team::kOne);
  require_team(s2, Team::kTwo);
  ClassMap<Rational> frontier;
  frontier.emplace(ClassKey{}, Rational(1));
  for (int round = 0; round < spec.rounds; ++round) {
    ClassMap<Rational> next;
    for (const auto& [key, mass] : frontier) {
      const Mixture& mix1 = require_mixture(spec, s1, key);
      const Mixture& mix2 = require_mixture(spec, s2, key);
      for (const auto& [a, wa] : mix1) {
        for (const auto& [b, wb] : mix2) {
          const Rational joint = mass * wa * wb;
          const Rational& p = spec.strength.at(a, b);
          if (p.sign() != 0) next[advance(key, a, b, true)] += joint * p;
          if (p != 1) next[advance(key, a, b, false)] += joint * (Rational(1) - p);
        }
      }
    }
    frontier = std::move(next);
  }
  Rational total;
  for (const auto& [key, mass] : frontier) total += mass * spec.utility.at(key.wins);
  return total;
}

Rational max_meeting_probability(const GameSpec& spec, const BehavioralStrategy& s2, int i, int j) {
  if (i < 0 || i >= spec.m() || j < 0 || j >= spec.n()) throw Error(ErrorCode::kIndex, "player index out of range");
  require_team(s2, Team::kTwo);
  MeetingMaximizer maximizer(spec, s2, i, j);
  return maximizer.eval(ClassKey{});
}

std::uint64_t count_pure_strategies(const GameSpec& spec, Team team, std::uint64_t budget) {
  return PureEnumerator(spec, team, budget, nullptr).run();
}

void enumerate_pure_strategies(const GameSpec& spec, Team team, const std::function<void(const PureAdaptiveStrategy&)>& visit,
                               std::uint64_t budget) {
  count_pure_strategies(spec, team, budget);
  PureEnumerator(spec, team, budget, &visit).run();
}

SimulationEstimate simulate(const GameSpec& spec, const BehavioralStrategy& s1, const BehavioralStrategy& s2,
                            std::uint64_t samples, std::uint64_t seed) {
  require_team(s1, Team::kOne);
  require_team(s2, Team::kTwo);
  Rng rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    ClassKey key;
    for (int round = 0; round < spec.rounds; ++round) {
      const Mixture& mix1 = require_mixture(spec, s1, key);
      const Mixture& mix2 = require_mixture(spec, s2, key);
      const int a = mix1[sample_index(mix1, rng)].first;
      const int b = mix2[sample_index(mix2, rng)].first;
      const Rational& p = spec.strength.at(a, b);
      // Exact 0/1 outcomes consume no randomness.
      const bool win = p == 1 || (p.sign() != 0 && rng.unit() < p.to_double());
      key = advance(key, a, b, win);
    }
    const double u = spec.utility.at(key.wins).to_double();
    sum += u;
    sum_sq += u * u;
  }
  SimulationEstimate est;
  est.samples = samples;
  if (samples == 0) return est;
  const double count = static_cast<double>(samples);
  est.mean = sum / count;
  const double variance = samples > 1 ? std::max(0.0, (sum_sq - count * est.mean * est.mean) / (count - 1)) : 0.0;
  est.standard_error = std::sqrt(variance / count);
  return est;
}

}  // namespace teamcomp
