// End-to-end acceptance run: one PASS/FAIL line per criterion. Exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "teamcomp/analysis.hpp"
#include "teamcomp/explorer.hpp"
#include "teamcomp/fixtures.hpp"
#include "teamcomp/solver.hpp"

using namespace teamcomp;

namespace {

constexpr std::uint64_t kSeed = 20240607;
constexpr int kDenominator = 6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  bool ok = out.pass;
  if (time_limit_s > 0 && secs >= time_limit_s) {
    ok = false;
    out.detail += " [over time limit " + std::to_string(static_cast<int>(time_limit_s)) + "s]";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << timing << ")";
  if (!out.detail.empty()) std::cout << " -- " << out.detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::string run_cli(const std::string& args, int& exit_code) {
  FILE* pipe = popen((std::string(TEAMCOMP_CLI) + " " + args + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start cli");
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

GameSpec identity3(const UtilityTable& u) {
  return GameSpec{3, StrengthMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), u};
}

// Failing report claims, comma separated.
std::string failed_claims(const Report& r) {
  std::string out;
  for (const auto& [name, ok] : r.claims) {
    if (!ok) out += (out.empty() ? "" : ",") + name;
  }
  return out;
}

}  // namespace

int main() {
  std::cout << "acceptance seed " << kSeed << std::endl;

  criterion(1, "card game value -1/3", 1.0, [] {
    const Rational v = solve(card_game()).root_value;
    return Outcome{v == Rational(-1, 3), "value " + v.str()};
  });

  criterion(2, "redundant-column game: root stage matrix, value, uniform guarantee", 0, [] {
    const GameSpec ex1 = redundant_column_game();
    const SolveResult r = solve(ex1);
    const bool matrix = stage_matrix(ex1, r.values, ClassKey{}) == MatrixGame::from_rows({{-1, -1, 1}, {0, 0, -1}});
    const Rational uniform = evaluate_fixed(ex1, uniform_strategy(ex1, Team::kOne));
    return Outcome{matrix && r.root_value == Rational(-1, 3) && uniform == Rational(-1, 2),
                   "value " + r.root_value.str() + ", uniform " + uniform.str() + (matrix ? "" : ", stage matrix differs")};
  });

  criterion(3, "diagonal-plus-dominated quadruple and abandonment deltas", 0, [] {
    const Rational p_um = solve(diagonal_plus_dominated_game(utility_um(3))).root_value;
    const Rational star_um = solve(identity3(utility_um(3))).root_value;
    const Rational p_ue = solve(diagonal_plus_dominated_game(utility_ue(3))).root_value;
    const Rational star_ue = solve(identity3(utility_ue(3))).root_value;
    const Rational d_um = abandonment_delta(diagonal_plus_dominated_game(utility_um(3)), Team::kOne, 0b1000);
    const Rational d_ue = abandonment_delta(diagonal_plus_dominated_game(utility_ue(3)), Team::kOne, 0b1000);
    const bool ok = p_um == 0 && star_um == Rational(-2, 3) && p_ue == Rational(-1, 2) && star_ue == Rational(-1, 2) &&
                    d_um == Rational(2, 3) && d_ue == 0;
    return Outcome{ok, "UM " + p_um.str() + "/" + star_um.str() + ", UE " + p_ue.str() + "/" + star_ue.str() +
                           ", deltas " + d_um.str() + " " + d_ue.str()};
  });

  criterion(4, "dominated helper: V(P*)=-1, V(P)>-1, pinned V(P)=-3/4 confirmed by game tree", 0, [] {
    const GameSpec p = dominated_helper_game();
    const Rational v = solve(p).root_value;
    const Rational star = solve(abandon(p, Team::kOne, 0b100)).root_value;
    const Rational tree = oracle::game_tree_value(p);
    const bool ok = star == -1 && v > -1 && v == Rational(-3, 4) && tree == v;
    return Outcome{ok, "V(P) " + v.str() + ", V(P*) " + star.str() + ", game tree " + tree.str()};
  });

  criterion(5, "uniform play certifies on 100 random m=n=T<=4 instances", 120, [] {
    Outcome out;
    for (int i = 0; i < 100; ++i) {
      Rng rng(kSeed, 5000 + static_cast<std::uint64_t>(i));
      const int T = rng.between(2, 4);
      const GameSpec spec{T, random_matrix(rng, T, T, kDenominator), rng.chance(0.5) ? utility_ue(T) : utility_um(T)};
      const Report r = check_theorem1(spec);
      if (!r.pass) {
        out.pass = false;
        out.detail += "instance " + std::to_string(i) + " fails; ";
      }
    }
    if (out.pass) out.detail = "100/100 instances";
    return out;
  });

  criterion(6, "uniform Team 1 gives every matching 1/T! against all Team 2 pure strategies, T in {2,3}", 120, [] {
    Outcome out;
    std::uint64_t strategies = 0;
    for (int T : {2, 3}) {
      for (int i = 0; i < 20; ++i) {
        Rng rng(kSeed, 6000 + 100 * static_cast<std::uint64_t>(T) + static_cast<std::uint64_t>(i));
        const GameSpec spec{T, random_matrix(rng, T, T, kDenominator), utility_ue(T)};
        const Report r = check_lemma2(spec);
        strategies += r.params.at("team1_uniform_strategies").get<std::uint64_t>();
        if (!r.pass) {
          out.pass = false;
          out.detail += "T=" + std::to_string(T) + " #" + std::to_string(i) + " fails; ";
        }
      }
    }
    if (out.pass) out.detail = "40 matrices, " + std::to_string(strategies) + " Team 2 strategies checked";
    return out;
  });

  criterion(7, "meeting probabilities <= 1/T for every Team 1 strategy, weak tails", 300, [] {
    Outcome out;
    int enumerated = 0;
    int instances = 0;
    for (int T : {2, 3}) {
      for (int m : {T + 1, T + 2}) {
        for (int i = 0; i < 20; ++i) {
          Rng rng(kSeed, 7000 + 1000 * static_cast<std::uint64_t>(T) + 100 * static_cast<std::uint64_t>(m) +
                             static_cast<std::uint64_t>(i));
          const GameSpec spec{T, random_weak_tail_matrix(rng, m, T, kDenominator), utility_ue(T)};
          const Report r = check_lemma5(spec);
          ++instances;
          if (r.params.at("enumerated_strategies").is_number()) ++enumerated;
          if (!r.pass || r.params.at("coverage") != "all strategies") {
            out.pass = false;
            out.detail += "T=" + std::to_string(T) + " m=" + std::to_string(m) + " #" + std::to_string(i) + " " +
                          failed_claims(r) + "; ";
          }
        }
      }
    }
    if (out.pass) {
      out.detail = std::to_string(instances) + " instances maximized over all strategies; " + std::to_string(enumerated) +
                   " also enumerated pure strategy by pure strategy";
    }
    return out;
  });

  criterion(8, "transitive teams: weak players abandonable, top-rank rows dominate", 120, [] {
    Outcome out;
    for (int i = 0; i < 50; ++i) {
      Rng rng(kSeed, 8000 + static_cast<std::uint64_t>(i));
      const int T = rng.between(1, 4);
      const int m = rng.between(T, 6);
      const int n = rng.between(T, 6);
      const GameSpec spec{T, random_transitive_matrix(rng, m, n, kDenominator), i % 2 == 0 ? utility_ue(T) : utility_um(T)};
      const Report r = check_theorem2(spec);
      if (!r.pass) {
        out.pass = false;
        out.detail += "#" + std::to_string(i) + " " + failed_claims(r) + "; ";
      }
    }
    if (out.pass) out.detail = "50/50 instances";
    return out;
  });

  criterion(9, "weak tail abandonable under expected wins; majority contrast reported", 0, [] {
    Outcome out;
    for (int i = 0; i < 50; ++i) {
      Rng rng(kSeed, 9000 + static_cast<std::uint64_t>(i));
      const int T = rng.between(1, 4);
      const int m = rng.between(T + 1, std::min(T + 2, 6));
      const GameSpec spec{T, random_weak_tail_matrix(rng, m, T, kDenominator), utility_ue(T)};
      const Report r = check_theorem3(spec);
      if (!r.pass) {
        out.pass = false;
        out.detail += "#" + std::to_string(i) + " " + failed_claims(r) + "; ";
      }
    }
    const Report contrast = check_theorem3(diagonal_plus_dominated_game(utility_um(3)));
    const bool reported = !contrast.claims.at("abandon_tail_keeps_value") &&
                          contrast.values.at("value") == 0 && contrast.values.at("value_without_tail") == Rational(-2, 3);
    out.pass = out.pass && reported;
    out.detail += "50 UE instances; UM contrast " + contrast.values.at("value").str() + " vs " +
                  contrast.values.at("value_without_tail").str() + (reported ? " (inequality reported)" : " (NOT reported)");
    return out;
  });

  criterion(10, "recruiting dominated players, T in {2,3,4}, both utilities", 180, [] {
    Outcome out;
    for (UtilityKind kind : {UtilityKind::kExpectedWins, UtilityKind::kMajority}) {
      for (int T : {2, 3, 4}) {
        const Report r = check_theorem4(T, kind);
        out.pass = out.pass && r.pass;
        const auto counts = r.params.at("recruit_counts");
        out.detail += utility_name(kind) + " T=" + std::to_string(T) + " (";
        for (std::size_t k = 0; k < 3; ++k) {
          out.detail += (k ? ", " : "") + r.values.at("value_recruits_" + std::to_string(counts[k].get<int>())).str();
        }
        out.detail += ") ";
      }
    }
    return out;
  });

  criterion(11, "threshold games with C <= 4", 120, [] {
    const Report r = check_lemma6(4);
    return Outcome{r.pass, std::to_string(r.params.at("games").get<int>()) + " games" +
                               (r.pass ? "" : ", failing: " + failed_claims(r))};
  });

  criterion(12, "recruiting-gain sweep: 500 UM and 500 UE instances, T <= 4", 0, [] {
    Outcome out;
    for (UtilityKind kind : {UtilityKind::kMajority, UtilityKind::kExpectedWins}) {
      SearchConfig config;
      config.seed = kSeed;
      config.instances = 500;
      config.rounds = {2, 4};
      config.utility = kind;
      const SweepSummary s = sweep(config);
      const Rational best = s.best ? s.best->record.gain : Rational(-1);
      out.detail += utility_name(kind) + ": " + std::to_string(s.instances) + " solved, " +
                    std::to_string(s.budget_failures.size()) + " over budget, max gain " + best.str() + " (bound " +
                    s.bound.str() + ")";
      if (s.exceedances.empty()) {
        out.detail += ", consistent with the bound; ";
      } else {
        out.detail += ", " + std::to_string(s.exceedances.size()) + " counterexample candidate(s), first digest " +
                      s.exceedances.front().record.digest + "; ";
      }
      if (s.instances < 500) out.pass = false;
      if (kind == UtilityKind::kMajority && best < Rational(2, 3)) out.pass = false;
    }
    return out;
  });

  criterion(13, "Monte Carlo within 4 standard errors, 1e5 samples", 30, [] {
    Outcome out;
    for (const auto& [name, spec] : {std::pair<std::string, GameSpec>{"card", card_game()},
                                     {"diagonal-plus-dominated UM", diagonal_plus_dominated_game(utility_um(3))}}) {
      const SolveResult r = solve(spec);
      const SimulationEstimate est = simulate(spec, r.strategy1, r.strategy2, 100000, kSeed);
      const double z = (est.mean - r.root_value.to_double()) / est.standard_error;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s: exact %s, mean %.5f, se %.5f, z %.2f; ", name.c_str(), r.root_value.str().c_str(),
                    est.mean, est.standard_error, z);
      out.detail += buf;
      out.pass = out.pass && std::abs(z) <= 4.0;
    }
    return out;
  });

  criterion(14, "solve, verify and sweep outputs are byte-identical across runs", 0, [] {
    Outcome out;
    for (const std::string args : {"solve --example ex3 --full", "solve --example ex5:4",
                                   "verify all --instances 3 --seed 11", "sweep --instances 40 --seed 11"}) {
      int c1 = 0;
      int c2 = 0;
      const std::string a = run_cli(args, c1);
      const std::string b = run_cli(args, c2);
      const bool same = a == b && c1 == 0 && c2 == 0 && !a.empty();
      out.pass = out.pass && same;
      out.detail += "'" + args + "' " + (same ? "identical" : "DIFFERS") + "; ";
    }
    return out;
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
