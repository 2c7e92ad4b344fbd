// teamcomp: command-line front end for the team competition solver.
//
// Exit codes: 0 success or all checks pass, 1 a check failed, 2 bad input,
// 3 class or enumeration budget exceeded.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "teamcomp/analysis.hpp"
#include "teamcomp/explorer.hpp"
#include "teamcomp/fixtures.hpp"
#include "teamcomp/solver.hpp"
#include "teamcomp/spec_io.hpp"
#include "teamcomp/suites.hpp"

namespace {

using nlohmann::json;
using namespace teamcomp;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Flags {
  std::string spec_path;
  std::string example;
  bool full = false;
  std::uint64_t seed = 7;
  std::optional<int> instances;
  std::optional<double> budget;
  std::string utility;
  std::optional<int> rounds;
  std::string rounds_range;
  std::string size_range;
  int c_max = 4;
  int max_recruits = 3;
  int denominator = 6;
  std::string out;
  std::string suite;
  int team = 1;
  std::string players;
  std::string strategy = "equilibrium";
  std::string strategy1 = "equilibrium";
  std::string strategy2 = "equilibrium";
  std::uint64_t samples = 100000;
  int gamma_c = 1;
  int gamma_a = 0;
  int gamma_b = 0;
};

GameSpec input_spec(const Flags& f) {
  if (!f.example.empty() && !f.spec_path.empty()) {
    throw Error(ErrorCode::kParams, "give either a spec file or --example, not both");
  }
  if (!f.example.empty()) return validate_spec(named_fixture(f.example)).spec;
  if (f.spec_path.empty()) throw Error(ErrorCode::kParams, "missing spec file (or --example NAME)");
  return load_spec_file(f.spec_path);
}

SolveOptions solve_options(const Flags& f) {
  SolveOptions o;
  if (f.budget) {
    if (*f.budget < 1) throw Error(ErrorCode::kParams, "--budget must be at least 1");
    o.class_budget = static_cast<std::uint64_t>(*f.budget);
  }
  return o;
}

std::optional<UtilityKind> utility_flag(const Flags& f) {
  if (f.utility.empty()) return std::nullopt;
  if (f.utility == "UE") return UtilityKind::kExpectedWins;
  if (f.utility == "UM") return UtilityKind::kMajority;
  throw Error(ErrorCode::kParams, "--utility must be UE or UM");
}

IntRange parse_range(const std::string& text, const char* flag) {
  IntRange r;
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      r.lo = std::stoi(text.substr(0, colon));
      r.hi = std::stoi(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParams, std::string(flag) + " expects LO:HI or a single integer");
  }
  return r;
}

PlayerSet parse_players(const std::string& text, int team_size) {
  PlayerSet set = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int p = 0;
    try {
      p = std::stoi(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParams, "--players expects 1-based indices separated by commas");
    }
    if (p < 1 || p > team_size) throw Error(ErrorCode::kIndex, "player " + item + " out of range");
    set = with(set, p - 1);
  }
  return set;
}

Team team_flag(int team) {
  if (team != 1 && team != 2) throw Error(ErrorCode::kParams, "--team must be 1 or 2");
  return team == 1 ? Team::kOne : Team::kTwo;
}

json players_json(PlayerSet set, int count) {
  json a = json::array();
  for (int p = 0; p < count; ++p) {
    if (contains(set, p)) a.push_back(p + 1);
  }
  return a;
}

json mixture_json(const Mixture& mix) {
  json a = json::array();
  for (const auto& [player, p] : mix) a.push_back({{"player", player + 1}, {"probability", rational_json(p)}});
  return a;
}

std::vector<ClassKey> sorted_keys(const ClassMap<Rational>& values) {
  std::vector<ClassKey> keys;
  keys.reserve(values.size());
  for (const auto& [k, v] : values) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [](const ClassKey& x, const ClassKey& y) {
    return std::tuple(x.level(), x.played1, x.played2, x.wins) < std::tuple(y.level(), y.played1, y.played2, y.wins);
  });
  return keys;
}

BehavioralStrategy named_strategy(const std::string& name, const SolveResult& result, Team team) {
  if (name == "uniform") return uniform_strategy(result.spec, team);
  if (name == "equilibrium") return team == Team::kOne ? result.strategy1 : result.strategy2;
  throw Error(ErrorCode::kParams, "strategy must be uniform or equilibrium");
}

json cmd_solve(const Flags& f) {
  const GameSpec spec = input_spec(f);
  const SolveResult result = solve(spec, solve_options(f));
  json doc{{"T", spec.rounds},
           {"m", spec.m()},
           {"n", spec.n()},
           {"classes", result.values.size()},
           {"root_value", rational_json(result.root_value)}};
  const ClassKey root{};
  const Mixture* s1 = result.strategy1.find(root);
  const Mixture* s2 = result.strategy2.find(root);
  doc["team1_root_strategy"] = s1 ? mixture_json(*s1) : json::array();
  doc["team2_root_strategy"] = s2 ? mixture_json(*s2) : json::array();
  if (f.full) {
    json table = json::array();
    for (const ClassKey& k : sorted_keys(result.values)) {
      json row{{"played1", players_json(k.played1, spec.m())},
               {"played2", players_json(k.played2, spec.n())},
               {"wins", k.wins},
               {"value", rational_json(result.values.at(k))}};
      if (const Mixture* m1 = result.strategy1.find(k)) row["team1"] = mixture_json(*m1);
      if (const Mixture* m2 = result.strategy2.find(k)) row["team2"] = mixture_json(*m2);
      table.push_back(std::move(row));
    }
    doc["values"] = std::move(table);
  }
  return doc;
}

json cmd_best_response(const Flags& f) {
  const GameSpec spec = input_spec(f);
  const Team team = team_flag(f.team);
  const SolveResult result = solve(spec, solve_options(f));
  const Rational guarantee = evaluate_fixed(spec, named_strategy(f.strategy, result, team));
  return json{{"fixed_team", f.team},
              {"fixed_strategy", f.strategy},
              {"value", rational_json(result.root_value)},
              // Team 1's payoff when the other team best-responds.
              {"best_response_value", rational_json(guarantee)},
              {"is_equilibrium_guarantee", guarantee == result.root_value}};
}

json team_json(const TeamClassification& tc) {
  json weakest = json::array();
  json dominated = json::array();
  for (std::size_t p = 0; p < tc.weakest.size(); ++p) {
    if (tc.weakest[p]) weakest.push_back(p + 1);
    if (tc.dominated[p]) dominated.push_back(p + 1);
  }
  json doc{{"weakest", weakest}, {"dominated", dominated}, {"transitive", tc.transitive}};
  if (tc.transitive) {
    json chain = json::array();
    for (int p : tc.chain) chain.push_back(p + 1);
    doc["chain_weakest_first"] = chain;
  }
  return doc;
}

json cmd_classify(const Flags& f) {
  const PlayerClassification c = classify(input_spec(f));
  return json{{"team1", team_json(c.team1)}, {"team2", team_json(c.team2)}};
}

json cmd_abandon_delta(const Flags& f) {
  const GameSpec spec = input_spec(f);
  const Team team = team_flag(f.team);
  const PlayerSet players = parse_players(f.players, spec.team_size(team));
  const GameSpec reduced = abandon(spec, team, players);
  const SolveOptions o = solve_options(f);
  return json{{"team", f.team},
              {"abandoned", players_json(players, spec.team_size(team))},
              {"value", rational_json(solve(spec, o).root_value)},
              {"value_abandoned", rational_json(solve(reduced, o).root_value)},
              {"delta", rational_json(abandonment_delta(spec, team, players, o))},
              {"abandoned_spec", spec_to_json(reduced)}};
}

json cmd_gamma(const Flags& f) {
  const GammaParams p{f.gamma_c, f.gamma_a, f.gamma_b};
  if (!gamma_params_valid(p)) throw Error(ErrorCode::kParams, "need C >= 1, 0 <= a <= ceil(C/2), 0 <= b <= floor(C/2)");
  json doc{{"C", p.C},
           {"a", p.a},
           {"b", p.b},
           {"T", gamma_rounds(p)},
           {"threshold", gamma_threshold(p)},
           {"value", rational_json(gamma_value(p, solve_options(f)))}};
  doc["spec"] = gamma_rounds(p) >= 1 ? spec_to_json(gamma_game(p)) : json(nullptr);
  return doc;
}

Report single_spec_check(const std::string& suite, const GameSpec& spec, const Flags& f) {
  const SolveOptions o = solve_options(f);
  if (suite == "theorem1") return check_theorem1(spec, o);
  if (suite == "lemma2") return check_lemma2(spec);
  if (suite == "theorem2") return check_theorem2(spec, o);
  if (suite == "lemma5") return check_lemma5(spec, {}, o);
  if (suite == "theorem3") return check_theorem3(spec, {}, o);
  throw Error(ErrorCode::kParams, "suite '" + suite + "' does not take a spec");
}

json cmd_verify(const Flags& f, int& exit_code) {
  Report report;
  if (!f.example.empty() || !f.spec_path.empty()) {
    report = single_spec_check(f.suite, input_spec(f), f);
  } else {
    SuiteOptions o;
    o.seed = f.seed;
    if (f.instances) o.instances = *f.instances;
    o.rounds = f.rounds;
    o.utility = utility_flag(f);
    o.c_max = f.c_max;
    o.solve = solve_options(f);
    report = run_suite(f.suite, o);
  }
  exit_code = report.pass ? kExitPass : kExitCheckFailed;
  return report.to_json();
}

SearchConfig sweep_config(const Flags& f) {
  SearchConfig c;
  c.seed = f.seed;
  c.instances = f.instances.value_or(100);
  if (f.rounds) c.rounds = IntRange{*f.rounds, *f.rounds};
  if (!f.rounds_range.empty()) c.rounds = parse_range(f.rounds_range, "--T-range");
  if (!f.size_range.empty()) c.team_size = parse_range(f.size_range, "--m-range");
  c.denominator_bound = f.denominator;
  c.utility = utility_flag(f).value_or(UtilityKind::kMajority);
  c.max_recruits = f.max_recruits;
  validate_config(c);
  return c;
}

json cmd_sweep(const Flags& f) {
  const SearchConfig config = sweep_config(f);
  std::ofstream csv;
  if (!f.out.empty()) {
    csv.open(f.out);
    if (!csv) throw Error(ErrorCode::kParams, "cannot open " + f.out);
    write_csv_header(csv);
  }
  const SweepSummary summary = sweep(
      config, [&](const SweepRow& row) {
        if (csv.is_open()) write_csv_row(csv, row, config.utility);
      },
      solve_options(f));
  return summary.to_json(config);
}

json cmd_simulate(const Flags& f) {
  const GameSpec spec = input_spec(f);
  const SolveResult result = solve(spec, solve_options(f));
  const BehavioralStrategy s1 = named_strategy(f.strategy1, result, Team::kOne);
  const BehavioralStrategy s2 = named_strategy(f.strategy2, result, Team::kTwo);
  const Rational exact = f.strategy1 == "equilibrium" && f.strategy2 == "equilibrium"
                             ? result.root_value
                             : evaluate_profile(spec, s1, s2);
  const SimulationEstimate est = simulate(spec, s1, s2, f.samples, f.seed);
  const double gap = est.mean - exact.to_double();
  return json{{"samples", est.samples},
              {"seed", f.seed},
              {"strategy1", f.strategy1},
              {"strategy2", f.strategy2},
              {"exact_value", rational_json(exact)},
              {"approx_mean", est.mean},
              {"approx_standard_error", est.standard_error},
              {"approx_error_in_standard_errors", est.standard_error > 0 ? gap / est.standard_error : 0.0}};
}

void add_spec_input(CLI::App* cmd, Flags& f) {
  cmd->add_option("spec", f.spec_path, "Game spec JSON file");
  cmd->add_option("--example", f.example, "Built-in fixture: card, ex1, ex2, ex3, ex4:T, ex5:T");
}

void add_budget(CLI::App* cmd, Flags& f) {
  cmd->add_option("--budget", f.budget, "Class evaluation budget (default 5e7)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and checker for sequential team competitions"};
  app.require_subcommand(1);
  Flags f;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a spec: root value and root strategies");
  add_spec_input(solve_cmd, f);
  add_budget(solve_cmd, f);
  solve_cmd->add_flag("--full", f.full, "Emit the value and strategy at every class");

  auto* br_cmd = app.add_subcommand("best-response", "Value against a best response to a fixed strategy");
  add_spec_input(br_cmd, f);
  add_budget(br_cmd, f);
  br_cmd->add_option("--team", f.team, "Team whose strategy is fixed (1 or 2)");
  br_cmd->add_option("--strategy", f.strategy, "uniform or equilibrium");

  auto* classify_cmd = app.add_subcommand("classify", "Weakest, dominated and transitivity flags");
  add_spec_input(classify_cmd, f);

  auto* abandon_cmd = app.add_subcommand("abandon-delta", "Value change from removing players");
  add_spec_input(abandon_cmd, f);
  add_budget(abandon_cmd, f);
  abandon_cmd->add_option("--team", f.team, "Team losing the players (1 or 2)");
  abandon_cmd->add_option("--players", f.players, "1-based indices, comma separated")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "Build and solve a threshold game");
  add_budget(gamma_cmd, f);
  gamma_cmd->add_option("--C", f.gamma_c, "C >= 1")->required();
  gamma_cmd->add_option("--a", f.gamma_a, "0 <= a <= ceil(C/2)");
  gamma_cmd->add_option("--b", f.gamma_b, "0 <= b <= floor(C/2)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a checker suite, or one checker on a spec");
  verify_cmd->add_option("suite", f.suite, "theorem1|theorem2|theorem3|theorem4|lemma2|lemma5|lemma6|all")->required();
  add_spec_input(verify_cmd, f);
  add_budget(verify_cmd, f);
  verify_cmd->add_option("--seed", f.seed, "Instance seed");
  verify_cmd->add_option("--instances", f.instances, "Generated instances per round count");
  verify_cmd->add_option("--T", f.rounds, "Only this round count");
  verify_cmd->add_option("--utility", f.utility, "UE or UM");
  verify_cmd->add_option("--Cmax", f.c_max, "Largest C for the threshold game grid");

  auto* sweep_cmd = app.add_subcommand("sweep", "Search generated instances for recruiting gains");
  add_budget(sweep_cmd, f);
  sweep_cmd->add_option("--seed", f.seed, "Generator seed");
  sweep_cmd->add_option("--instances", f.instances, "Instance count (default 100)");
  sweep_cmd->add_option("--T", f.rounds, "Fixed round count");
  sweep_cmd->add_option("--T-range", f.rounds_range, "Round count range LO:HI (default 2:4)");
  sweep_cmd->add_option("--m-range", f.size_range, "Team size range LO:HI (default 2:6)");
  sweep_cmd->add_option("--denominator", f.denominator, "Largest probability denominator (default 6)");
  sweep_cmd->add_option("--utility", f.utility, "UE or UM (default UM)");
  sweep_cmd->add_option("--max-recruits", f.max_recruits, "Most dominated players to add (default 3)");
  sweep_cmd->add_option("--out", f.out, "CSV output path");

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of a strategy profile's value");
  add_spec_input(sim_cmd, f);
  add_budget(sim_cmd, f);
  sim_cmd->add_option("--samples", f.samples, "Competitions to play (default 1e5)");
  sim_cmd->add_option("--seed", f.seed, "Sampling seed");
  sim_cmd->add_option("--strategy1", f.strategy1, "uniform or equilibrium");
  sim_cmd->add_option("--strategy2", f.strategy2, "uniform or equilibrium");

  for (auto* cmd : {solve_cmd, br_cmd, classify_cmd, abandon_cmd, gamma_cmd, verify_cmd, sim_cmd}) {
    cmd->add_option("--out", f.out, "Also write the JSON document to this path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  int exit_code = kExitPass;
  try {
    json doc;
    if (solve_cmd->parsed()) doc = cmd_solve(f);
    else if (br_cmd->parsed()) doc = cmd_best_response(f);
    else if (classify_cmd->parsed()) doc = cmd_classify(f);
    else if (abandon_cmd->parsed()) doc = cmd_abandon_delta(f);
    else if (gamma_cmd->parsed()) doc = cmd_gamma(f);
    else if (verify_cmd->parsed()) doc = cmd_verify(f, exit_code);
    else if (sweep_cmd->parsed()) doc = cmd_sweep(f);
    else doc = cmd_simulate(f);
    const std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!f.out.empty() && !sweep_cmd->parsed()) {
      std::ofstream out(f.out);
      if (!out) throw Error(ErrorCode::kParams, "cannot open " + f.out);
      out << text;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kBudget ? kExitBudget : kExitInput;
  }
  return exit_code;
}
