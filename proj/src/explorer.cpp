#include "teamcomp/explorer.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "teamcomp/spec_io.hpp"

namespace teamcomp {
namespace {

using nlohmann::json;

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t k = v.size(); k > 1; --k) {
    const auto j = static_cast<std::size_t>(rng.below(k));
    std::swap(v[k - 1], v[j]);
  }
}

std::vector<int> shuffled_indices(int count, Rng& rng) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), 0);
  shuffle(v, rng);
  return v;
}

// Distinct rationals in [0, 1] with denominator at most `bound`, ascending.
// Generators draw indices into this list, so index order is value order.
std::vector<Rational> farey(int bound) {
  std::vector<Rational> values;
  for (int d = 1; d <= bound; ++d) {
    for (int k = 0; k <= d; ++k) values.emplace_back(k, d);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

StrengthMatrix from_levels(const std::vector<std::vector<int>>& k, const std::vector<Rational>& values) {
  std::vector<Rational> entries;
  for (const auto& row : k) {
    for (int v : row) entries.push_back(values[static_cast<std::size_t>(v)]);
  }
  return StrengthMatrix(static_cast<int>(k.size()), k.empty() ? 0 : static_cast<int>(k.front().size()), std::move(entries));
}

std::vector<std::vector<int>> random_levels(Rng& rng, int m, int n, int levels) {
  std::vector<std::vector<int>> k(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : k) {
    for (auto& v : row) v = rng.between(0, levels - 1);
  }
  return k;
}

const std::vector<Rational> kZeroOne{0, 1};

json row_json(const SweepRow& row, UtilityKind kind) {
  return json{{"index", row.index},
              {"digest", row.record.digest},
              {"spec", spec_to_json(row.spec)},
              {"utility", utility_name(kind)},
              {"recruits_used", row.record.recruits_used},
              {"base_value", rational_json(row.record.base_value)},
              {"best_value", rational_json(row.record.best_value)},
              {"gain", rational_json(row.record.gain)}};
}

}  // namespace

void validate_config(const SearchConfig& c) {
  if (c.instances < 0) throw Error(ErrorCode::kParams, "instances must be nonnegative");
  if (c.rounds.lo < 1 || c.rounds.hi < c.rounds.lo) throw Error(ErrorCode::kParams, "empty T range");
  if (c.team_size.lo < 1 || c.team_size.hi < c.team_size.lo) throw Error(ErrorCode::kParams, "empty team size range");
  if (std::max(c.rounds.hi, c.team_size.hi) + std::max(c.max_recruits, 0) > kMaxPlayers) {
    throw Error(ErrorCode::kParams, "team sizes plus recruits exceed the player cap");
  }
  if (c.denominator_bound < 1) throw Error(ErrorCode::kParams, "denominator bound must be at least 1");
  if (c.max_recruits < 0) throw Error(ErrorCode::kParams, "max recruits must be nonnegative");
  if (c.structured_probability < 0 || c.structured_probability > 1) {
    throw Error(ErrorCode::kParams, "structured probability must lie in [0, 1]");
  }
}

UtilityTable make_utility(UtilityKind kind, int rounds) {
  return kind == UtilityKind::kExpectedWins ? utility_ue(rounds) : utility_um(rounds);
}

std::string utility_name(UtilityKind kind) { return kind == UtilityKind::kExpectedWins ? "UE" : "UM"; }

StrengthMatrix random_matrix(Rng& rng, int m, int n, int denominator_bound) {
  const auto values = farey(denominator_bound);
  return from_levels(random_levels(rng, m, n, static_cast<int>(values.size())), values);
}

StrengthMatrix random_partial_permutation(Rng& rng, int m, int n) {
  const int ones = rng.between(1, std::min(m, n));
  const auto rows = shuffled_indices(m, rng);
  const auto cols = shuffled_indices(n, rng);
  std::vector<std::vector<int>> k(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int t = 0; t < ones; ++t) k[static_cast<std::size_t>(rows[static_cast<std::size_t>(t)])][static_cast<std::size_t>(cols[static_cast<std::size_t>(t)])] = 1;
  return from_levels(k, kZeroOne);
}

StrengthMatrix random_transitive_matrix(Rng& rng, int m, int n, int denominator_bound) {
  const auto values = farey(denominator_bound);
  auto k = random_levels(rng, m, n, static_cast<int>(values.size()));
  // Row 0 strongest (entries nonincreasing down a column); column 0 the
  // strongest opponent (entries nondecreasing along a row).
  for (int i = m - 1; i >= 0; --i) {
    for (int j = 0; j < n; ++j) {
      int& v = k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i + 1 < m) v = std::max(v, k[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)]);
      if (j > 0) v = std::max(v, k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    }
  }
  const auto rows = shuffled_indices(m, rng);
  const auto cols = shuffled_indices(n, rng);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])][static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])] =
          k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return from_levels(out, values);
}

StrengthMatrix random_weak_tail_matrix(Rng& rng, int m, int rounds, int denominator_bound) {
  const auto values = farey(denominator_bound);
  auto k = random_levels(rng, m, rounds, static_cast<int>(values.size()));
  for (int j = 0; j < rounds; ++j) {
    int floor_k = static_cast<int>(values.size()) - 1;
    for (int i = 0; i < rounds; ++i) floor_k = std::min(floor_k, k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int i = rounds; i < m; ++i) k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rng.between(0, floor_k);
  }
  return from_levels(k, values);
}

GameSpec generate_instance(const SearchConfig& config, int index) {
  validate_config(config);
  Rng rng(config.seed, static_cast<std::uint64_t>(index));
  const int rounds = rng.between(config.rounds.lo, config.rounds.hi);
  const int lo = std::max(rounds, config.team_size.lo);
  const int hi = std::max(lo, config.team_size.hi);
  GameSpec spec;
  spec.rounds = rounds;
  spec.utility = make_utility(config.utility, rounds);
  if (rng.chance(config.structured_probability)) {
    // Half of the structured draws are square with no redundant players and
    // a full permutation, the shape where abandoning a recruit costs most.
    if (rng.chance(0.5)) {
      const auto perm = shuffled_indices(rounds, rng);
      std::vector<std::vector<int>> k(static_cast<std::size_t>(rounds), std::vector<int>(static_cast<std::size_t>(rounds), 0));
      for (int i = 0; i < rounds; ++i) k[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
      spec.strength = from_levels(k, kZeroOne);
    } else {
      spec.strength = random_partial_permutation(rng, rng.between(lo, hi), rng.between(lo, hi));
    }
  } else {
    spec.strength = random_matrix(rng, rng.between(lo, hi), rng.between(lo, hi), config.denominator_bound);
  }
  return spec;
}

std::string spec_digest(const GameSpec& spec) {
  const std::string text = spec_to_json(spec).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GainRecord max_gain(const GameSpec& spec, int max_recruits, const SolveOptions& options) {
  if (max_recruits < 0 || spec.m() + max_recruits > kMaxPlayers) {
    throw Error(ErrorCode::kSize, "recruit count exceeds the player cap");
  }
  GainRecord rec;
  rec.digest = spec_digest(spec);
  for (int r = 0; r <= max_recruits; ++r) {
    rec.value_by_recruits.push_back(solve(add_dominated(spec, r), options).root_value);
    if (r == 0 || rec.value_by_recruits.back() > rec.best_value) {
      rec.best_value = rec.value_by_recruits.back();
      rec.recruits_used = r;
    }
  }
  rec.base_value = rec.value_by_recruits.front();
  rec.gain = rec.best_value - rec.base_value;
  return rec;
}

int recruit_cap(UtilityKind kind, int rounds) { return kind == UtilityKind::kExpectedWins ? rounds - 1 : rounds / 2; }

Rational conjectured_bound(UtilityKind kind) { return kind == UtilityKind::kExpectedWins ? Rational(1) : Rational(2, 3); }

SweepSummary sweep(const SearchConfig& config, const std::function<void(const SweepRow&)>& on_row,
                   const SolveOptions& options) {
  validate_config(config);
  SweepSummary summary;
  summary.bound = conjectured_bound(config.utility);
  for (int index = 0; index < config.instances; ++index) {
    SweepRow row;
    row.index = index;
    row.spec = generate_instance(config, index);
    const int recruits = std::min(config.max_recruits, recruit_cap(config.utility, row.spec.rounds));
    try {
      row.record = max_gain(row.spec, recruits, options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudget) throw;
      summary.budget_failures.push_back(index);
      continue;
    }
    ++summary.instances;
    if (!summary.best || row.record.gain > summary.best->record.gain) summary.best = row;
    if (row.record.gain > summary.bound) summary.exceedances.push_back(row);
    if (on_row) on_row(row);
  }
  return summary;
}

json SweepSummary::to_json(const SearchConfig& config) const {
  json exceed = json::array();
  for (const auto& row : exceedances) exceed.push_back(row_json(row, config.utility));
  json doc{{"config",
            {{"seed", config.seed},
             {"instances", config.instances},
             {"T_range", {config.rounds.lo, config.rounds.hi}},
             {"m_range", {config.team_size.lo, config.team_size.hi}},
             {"denominator_bound", config.denominator_bound},
             {"utility", utility_name(config.utility)},
             {"max_recruits", config.max_recruits},
             {"structured_probability", rational_json(Rational(mpq_class(config.structured_probability)))}}},
           {"instances_solved", instances},
           {"budget_failures", budget_failures},
           {"bound", rational_json(bound)},
           {"counterexample_candidates", exceed},
           {"verdict", exceedances.empty() ? "consistent with conjectured bound" : "counterexample candidate"}};
  if (best) {
    doc["max_gain"] = rational_json(best->record.gain);
    doc["max_gain_witness"] = row_json(*best, config.utility);
  } else {
    doc["max_gain"] = nullptr;
  }
  return doc;
}

void write_csv_header(std::ostream& out) {
  out << "index,T,m,n,utility,recruits_used,base_value,best_value,gain\n";
}

void write_csv_row(std::ostream& out, const SweepRow& row, UtilityKind kind) {
  out << row.index << ',' << row.spec.rounds << ',' << row.spec.m() << ',' << row.spec.n() << ',' << utility_name(kind)
      << ',' << row.record.recruits_used << ',' << row.record.base_value << ',' << row.record.best_value << ','
      << row.record.gain << '\n';
}

}  // namespace teamcomp
