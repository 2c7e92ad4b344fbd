#include "teamcomp/suites.hpp"

#include <algorithm>

#include "teamcomp/explorer.hpp"
#include "teamcomp/fixtures.hpp"
#include "teamcomp/spec_io.hpp"

namespace teamcomp {
namespace {

using nlohmann::json;

constexpr int kDenominator = 6;

// Disjoint Rng streams per suite, per round count and per instance.
std::uint64_t stream_id(int suite, int rounds, int index) {
  return (static_cast<std::uint64_t>(suite) << 40) | (static_cast<std::uint64_t>(rounds) << 32) |
         static_cast<std::uint64_t>(index);
}

std::vector<int> round_list(const SuiteOptions& o, std::vector<int> defaults, int lo, int hi) {
  if (!o.rounds) return defaults;
  if (*o.rounds < lo || *o.rounds > hi) {
    throw Error(ErrorCode::kParams, "T must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return {*o.rounds};
}

std::vector<UtilityKind> utility_list(const SuiteOptions& o) {
  if (o.utility) return {*o.utility};
  return {UtilityKind::kExpectedWins, UtilityKind::kMajority};
}

// Folds an instance report into the suite report; witnesses carry the
// instance so a failure can be replayed.
void absorb(Report& suite, const Report& sub, const std::string& label, const GameSpec& spec) {
  for (const auto& [name, ok] : sub.claims) suite.claim(name, ok);
  for (const auto& w : sub.witnesses) {
    json copy = w;
    copy["instance"] = label;
    copy["spec"] = spec_to_json(spec);
    suite.witnesses.push_back(std::move(copy));
  }
}

Report new_report(const std::string& name, const SuiteOptions& o) {
  Report r;
  r.check = name;
  r.params = {{"seed", o.seed}, {"instances_per_T", o.instances}};
  return r;
}

std::string label(int rounds, int index) { return "T" + std::to_string(rounds) + "#" + std::to_string(index); }

Report suite_theorem1(const SuiteOptions& o) {
  Report r = new_report("theorem1", o);
  const auto rounds = round_list(o, {2, 3, 4}, 1, 6);
  r.params["T"] = rounds;
  for (int T : rounds) {
    for (int i = 0; i < o.instances; ++i) {
      Rng rng(o.seed, stream_id(1, T, i));
      GameSpec spec{T, random_matrix(rng, T, T, kDenominator), make_utility(rng.chance(0.5) ? UtilityKind::kExpectedWins : UtilityKind::kMajority, T)};
      absorb(r, check_theorem1(spec, o.solve), label(T, i), spec);
    }
  }
  const GameSpec card = card_game();
  const Report c = check_theorem1(card, o.solve);
  absorb(r, c, "card", card);
  r.values["card_value"] = c.values.at("root_value");
  return r;
}

Report suite_lemma2(const SuiteOptions& o) {
  Report r = new_report("lemma2", o);
  const auto rounds = round_list(o, {2, 3}, 1, 4);
  r.params["T"] = rounds;
  for (int T : rounds) {
    for (int i = 0; i < o.instances; ++i) {
      Rng rng(o.seed, stream_id(2, T, i));
      GameSpec spec{T, random_matrix(rng, T, T, kDenominator), utility_ue(T)};
      const Report sub = check_lemma2(spec, o.lemma5.enumeration_budget);
      absorb(r, sub, label(T, i), spec);
      r.params["strategies_T" + std::to_string(T)] = sub.params.at("team1_uniform_strategies");
    }
  }
  return r;
}

Report suite_theorem2(const SuiteOptions& o) {
  Report r = new_report("theorem2", o);
  const auto rounds = round_list(o, {2, 3, 4}, 1, 6);
  const auto utilities = utility_list(o);
  r.params["T"] = rounds;
  for (int T : rounds) {
    for (int i = 0; i < o.instances; ++i) {
      Rng rng(o.seed, stream_id(3, T, i));
      const int m = rng.between(T, 6);
      const int n = rng.between(T, 6);
      const UtilityKind kind = utilities[static_cast<std::size_t>(i) % utilities.size()];
      GameSpec spec{T, random_transitive_matrix(rng, m, n, kDenominator), make_utility(kind, T)};
      absorb(r, check_theorem2(spec, o.solve), label(T, i), spec);
    }
  }
  return r;
}

GameSpec weak_tail_instance(const SuiteOptions& o, int suite, int T, int i, int m_lo, int m_hi) {
  Rng rng(o.seed, stream_id(suite, T, i));
  const int m = rng.between(m_lo, m_hi);
  return GameSpec{T, random_weak_tail_matrix(rng, m, T, kDenominator), utility_ue(T)};
}

Report suite_lemma5(const SuiteOptions& o) {
  Report r = new_report("lemma5", o);
  const auto rounds = round_list(o, {2, 3}, 1, 6);
  r.params["T"] = rounds;
  for (int T : rounds) {
    for (int i = 0; i < o.instances; ++i) {
      const GameSpec spec = weak_tail_instance(o, 4, T, i, T + 1, T + 2);
      absorb(r, check_lemma5(spec, o.lemma5, o.solve), label(T, i), spec);
    }
  }
  return r;
}

Report suite_theorem3(const SuiteOptions& o) {
  Report r = new_report("theorem3", o);
  const auto rounds = round_list(o, {2, 3, 4}, 1, 6);
  r.params["T"] = rounds;
  for (int T : rounds) {
    for (int i = 0; i < o.instances; ++i) {
      const GameSpec spec = weak_tail_instance(o, 5, T, i, T + 1, std::min(T + 2, 6));
      absorb(r, check_theorem3(spec, o.lemma5, o.solve), label(T, i), spec);
    }
  }
  // Under majority utility the tail matters; the checker must say so.
  const GameSpec majority = diagonal_plus_dominated_game(utility_um(3));
  const Report contrast = check_theorem3(majority, o.lemma5, o.solve);
  r.values["majority_contrast_value"] = contrast.values.at("value");
  r.values["majority_contrast_value_without_tail"] = contrast.values.at("value_without_tail");
  r.claim("majority_contrast_reports_inequality", !contrast.claims.at("abandon_tail_keeps_value"),
          json{{"value", rational_json(contrast.values.at("value"))},
               {"value_without_tail", rational_json(contrast.values.at("value_without_tail"))}});
  return r;
}

Report suite_theorem4(const SuiteOptions& o) {
  Report r = new_report("theorem4", o);
  const auto rounds = round_list(o, {2, 3, 4}, 2, 8);
  r.params = {{"T", rounds}};
  for (UtilityKind kind : utility_list(o)) {
    for (int T : rounds) {
      r.merge(check_theorem4(T, kind, o.solve), utility_name(kind) + ".T" + std::to_string(T) + ".");
    }
  }
  return r;
}

Report suite_lemma6(const SuiteOptions& o) {
  if (o.c_max < 1) throw Error(ErrorCode::kParams, "Cmax must be at least 1");
  return check_lemma6(o.c_max, o.solve);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1", "lemma2", "theorem2", "lemma5",
                                              "theorem3", "theorem4", "lemma6"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.instances < 0) throw Error(ErrorCode::kParams, "instances must be nonnegative");
  if (name == "theorem1") return suite_theorem1(options);
  if (name == "lemma2") return suite_lemma2(options);
  if (name == "theorem2") return suite_theorem2(options);
  if (name == "lemma5") return suite_lemma5(options);
  if (name == "theorem3") return suite_theorem3(options);
  if (name == "theorem4") return suite_theorem4(options);
  if (name == "lemma6") return suite_lemma6(options);
  if (name == "all") {
    Report r;
    r.check = "all";
    for (const auto& n : suite_names()) r.merge(run_suite(n, options), n + ".");
    return r;
  }
  throw Error(ErrorCode::kParams, "unknown suite '" + name + "'");
}

}  // namespace teamcomp
