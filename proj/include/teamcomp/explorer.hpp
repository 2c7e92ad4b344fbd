#pragma once

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "teamcomp/analysis.hpp"
#include "teamcomp/model.hpp"
#include "teamcomp/random.hpp"
#include "teamcomp/solver.hpp"

namespace teamcomp {

struct IntRange {
  int lo = 1;
  int hi = 1;
};

struct SearchConfig {
  std::uint64_t seed = 1;
  int instances = 100;
  IntRange rounds{2, 4};
  // Range for both team sizes before clamping to at least T.
  IntRange team_size{2, 6};
  int denominator_bound = 6;
  UtilityKind utility = UtilityKind::kMajority;
  int max_recruits = 3;
  // Share of instances drawn from the 0/1 partial-permutation family.
  double structured_probability = 0.25;
};

// Throws Error{kParams} on empty ranges or a denominator bound below 1.
void validate_config(const SearchConfig& config);

UtilityTable make_utility(UtilityKind kind, int rounds);
std::string utility_name(UtilityKind kind);

// ---- Random instance families ----------------------------------------------

// Entries uniform over the distinct rationals in [0, 1] with denominator at
// most `denominator_bound`.
StrengthMatrix random_matrix(Rng& rng, int m, int n, int denominator_bound);

// Random 0/1 matrix with a random set of disjoint (row, column) ones.
StrengthMatrix random_partial_permutation(Rng& rng, int m, int n);

// Both teams transitive. Rows and columns are shuffled so the chain order is
// not the index order.
StrengthMatrix random_transitive_matrix(Rng& rng, int m, int n, int denominator_bound);

// Rows 0..T-1 arbitrary; every later row is entrywise below the minimum of
// the first T rows.
StrengthMatrix random_weak_tail_matrix(Rng& rng, int m, int rounds, int denominator_bound);

// Deterministic in (config.seed, index); index selects an independent Rng
// stream.
GameSpec generate_instance(const SearchConfig& config, int index);

// ---- Recruiting search -----------------------------------------------------

struct GainRecord {
  std::string digest;
  int recruits_used = 0;
  Rational base_value;
  Rational best_value;
  Rational gain;
  // value_by_recruits[r] = value with r dominated players added.
  std::vector<Rational> value_by_recruits;
};

// Short stable hash of the canonical JSON form of a spec.
std::string spec_digest(const GameSpec& spec);

// Solves with 0..max_recruits dominated rows added. recruits_used is the
// smallest count reaching the best value.
GainRecord max_gain(const GameSpec& spec, int max_recruits, const SolveOptions& options = {});

// Recruit cap beyond which more dominated players never help: T-1 for
// expected-wins utility, floor(T/2) for majority.
int recruit_cap(UtilityKind kind, int rounds);

// Gain bound under test: 2/3 for majority utility, 1 for expected-wins.
Rational conjectured_bound(UtilityKind kind);

struct SweepRow {
  int index = 0;
  GameSpec spec;
  GainRecord record;
};

struct SweepSummary {
  int instances = 0;
  std::vector<int> budget_failures;
  std::optional<SweepRow> best;
  Rational bound;
  std::vector<SweepRow> exceedances;

  nlohmann::json to_json(const SearchConfig& config) const;
};

// Runs max_gain over every generated instance with recruits capped at
// min(config.max_recruits, recruit_cap). Instances that exceed the class
// budget are recorded and skipped. `on_row` sees rows in index order.
SweepSummary sweep(const SearchConfig& config, const std::function<void(const SweepRow&)>& on_row = {},
                   const SolveOptions& options = {});

// Header plus one line per row: index,T,m,n,utility,recruits_used,
// base_value,best_value,gain.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepRow& row, UtilityKind kind);

}  // namespace teamcomp
