#include <doctest.h>

#include <set>
#include <sstream>

#include "teamcomp/analysis.hpp"
#include "teamcomp/error.hpp"
#include "teamcomp/explorer.hpp"
#include "teamcomp/fixtures.hpp"
#include "teamcomp/spec_io.hpp"
#include "teamcomp/suites.hpp"

using namespace teamcomp;

TEST_CASE("generate_instance is deterministic and valid") {
  SearchConfig config;
  for (int i = 0; i < 50; ++i) {
    const GameSpec a = generate_instance(config, i);
    CHECK(a == generate_instance(config, i));
    CHECK_NOTHROW(validate_spec(a));
    CHECK(a.rounds >= config.rounds.lo);
    CHECK(a.rounds <= config.rounds.hi);
    CHECK(a.m() <= config.team_size.hi);
  }
  SearchConfig other = config;
  other.seed = 2;
  int differ = 0;
  for (int i = 0; i < 10; ++i) differ += generate_instance(config, i) == generate_instance(other, i) ? 0 : 1;
  CHECK(differ > 0);
}

TEST_CASE("denominator bound 1 gives 0/1 entries") {
  SearchConfig config;
  config.denominator_bound = 1;
  config.structured_probability = 0;
  for (int i = 0; i < 20; ++i) {
    const GameSpec s = generate_instance(config, i);
    for (int r = 0; r < s.m(); ++r) {
      for (const Rational& v : s.strength.row(r)) CHECK((v == 0 || v == 1));
    }
  }
}

TEST_CASE("random entries cover every denominator up to the bound") {
  Rng rng(40);
  std::set<mpz_class> denominators;
  for (int k = 0; k < 50; ++k) {
    const StrengthMatrix p = random_matrix(rng, 4, 4, 6);
    for (int r = 0; r < 4; ++r) {
      for (const Rational& v : p.row(r)) {
        CHECK(v >= 0);
        CHECK(v <= 1);
        denominators.insert(v.denominator());
      }
    }
  }
  CHECK(denominators == std::set<mpz_class>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("structured draws include square permutations") {
  SearchConfig config;
  config.structured_probability = 1;
  int square = 0;
  for (int i = 0; i < 40; ++i) {
    const GameSpec s = generate_instance(config, i);
    if (s.m() != s.rounds || s.n() != s.rounds) continue;
    bool permutation = true;
    for (int r = 0; r < s.m(); ++r) {
      Rational total;
      for (const Rational& v : s.strength.row(r)) total += v;
      permutation = permutation && total == 1;
    }
    square += permutation ? 1 : 0;
  }
  CHECK(square > 0);
}

TEST_CASE("config validation") {
  SearchConfig bad;
  bad.rounds = {3, 2};
  CHECK_THROWS_AS(validate_config(bad), Error);
  bad = SearchConfig{};
  bad.denominator_bound = 0;
  CHECK_THROWS_AS(validate_config(bad), Error);
  bad = SearchConfig{};
  bad.structured_probability = 1.5;
  CHECK_THROWS_AS(validate_config(bad), Error);
}

TEST_CASE("generators respect their structure") {
  Rng rng(41);
  for (int k = 0; k < 30; ++k) {
    const GameSpec t{1, random_transitive_matrix(rng, 5, 4, 6), utility_ue(1)};
    const auto c = classify(t);
    CHECK(c.team1.transitive);
    CHECK(c.team2.transitive);

    const int T = rng.between(1, 3);
    const GameSpec w{T, random_weak_tail_matrix(rng, T + 2, T, 6), utility_ue(T)};
    for (int tail = T; tail < w.m(); ++tail) {
      for (int head = 0; head < T; ++head) CHECK(weaker(w, Team::kOne, tail, head));
    }

    const StrengthMatrix p = random_partial_permutation(rng, 4, 3);
    int ones = 0;
    for (int r = 0; r < 4; ++r) {
      int in_row = 0;
      for (const Rational& v : p.row(r)) in_row += v == 1 ? 1 : 0;
      CHECK(in_row <= 1);
      ones += in_row;
    }
    for (int j = 0; j < 3; ++j) {
      int in_col = 0;
      for (const Rational& v : p.col(j)) in_col += v == 1 ? 1 : 0;
      CHECK(in_col <= 1);
    }
    CHECK(ones >= 1);
  }
}

TEST_CASE("max_gain") {
  const GainRecord five = max_gain(majority_recruit_base(3), 2);
  CHECK(five.gain > 0);
  CHECK(five.recruits_used == 1);
  CHECK(five.value_by_recruits[2] == five.value_by_recruits[1]);

  const GameSpec star = abandon(named_fixture("ex3"), Team::kOne, 0b1000);
  const GainRecord g = max_gain(star, 1);
  CHECK(g.gain == Rational(2, 3));
  CHECK(g.base_value == Rational(-2, 3));

  const GainRecord none = max_gain(card_game(), 0);
  CHECK(none.gain == 0);
  CHECK(none.recruits_used == 0);
  CHECK_THROWS_AS(max_gain(card_game(), kMaxPlayers), Error);
}

TEST_CASE("recruit caps and bounds") {
  CHECK(recruit_cap(UtilityKind::kExpectedWins, 4) == 3);
  CHECK(recruit_cap(UtilityKind::kMajority, 5) == 2);
  CHECK(conjectured_bound(UtilityKind::kMajority) == Rational(2, 3));
  CHECK(conjectured_bound(UtilityKind::kExpectedWins) == 1);
}

TEST_CASE("weak tails give no gain under expected wins") {
  Rng rng(42);
  for (int k = 0; k < 8; ++k) {
    const int T = rng.between(1, 3);
    const GameSpec w{T, random_weak_tail_matrix(rng, T + 1, T, 6), utility_ue(T)};
    CHECK(max_gain(w, 2).gain == 0);
  }
}

TEST_CASE("sweep is deterministic and monotone") {
  SearchConfig config;
  config.instances = 25;
  config.rounds = {2, 3};
  config.team_size = {2, 4};
  std::ostringstream csv1, csv2;
  write_csv_header(csv1);
  write_csv_header(csv2);
  const auto a = sweep(config, [&](const SweepRow& r) {
    write_csv_row(csv1, r, config.utility);
    CHECK(r.record.gain >= 0);
    for (std::size_t k = 1; k < r.record.value_by_recruits.size(); ++k) {
      CHECK(r.record.value_by_recruits[k] >= r.record.value_by_recruits[k - 1]);
    }
  });
  const auto b = sweep(config, [&](const SweepRow& r) { write_csv_row(csv2, r, config.utility); });
  CHECK(csv1.str() == csv2.str());
  CHECK(a.to_json(config).dump() == b.to_json(config).dump());
  CHECK(a.instances == 25);
  CHECK(csv1.str().rfind("index,T,m,n,utility,recruits_used,base_value,best_value,gain\n", 0) == 0);
  const auto doc = a.to_json(config);
  CHECK(doc.at("verdict").get<std::string>().find("verified") == std::string::npos);
}

TEST_CASE("sweep records budget failures") {
  SearchConfig config;
  config.instances = 3;
  SolveOptions tiny;
  tiny.class_budget = 5;
  const auto s = sweep(config, {}, tiny);
  CHECK(s.instances == 0);
  CHECK(s.budget_failures == std::vector<int>{0, 1, 2});
  CHECK(s.to_json(config).at("max_gain").is_null());
}

TEST_CASE("suites are reproducible") {
  SuiteOptions o;
  o.instances = 3;
  o.rounds = 2;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const Report a = run_suite(name, o);
    CHECK(a.pass);
    CHECK(a.to_json().dump() == run_suite(name, o).to_json().dump());
  }
  CHECK_THROWS_AS(run_suite("theorem9", o), Error);
}
