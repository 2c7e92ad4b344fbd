#include "teamcomp/model.hpp"

#include <algorithm>
#include <string>

namespace teamcomp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRange: return "RANGE";
    case ErrorCode::kSize: return "SIZE";
    case ErrorCode::kShape: return "SHAPE";
    case ErrorCode::kIndex: return "INDEX";
    case ErrorCode::kDist: return "DIST";
    case ErrorCode::kTerminal: return "TERMINAL";
    case ErrorCode::kCoverage: return "COVERAGE";
    case ErrorCode::kRedundant: return "REDUNDANT";
    case ErrorCode::kBudget: return "BUDGET";
    case ErrorCode::kPrecond: return "PRECOND";
    case ErrorCode::kParams: return "PARAMS";
    case ErrorCode::kParse: return "PARSE";
  }
  return "UNKNOWN";
}

std::vector<int> unplayed(PlayerSet played, int count) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p) {
    if (!contains(played, p)) out.push_back(p);
  }
  return out;
}

void for_each_subset(int count, int size, const std::function<void(PlayerSet)>& fn) {
  if (size < 0 || size > count) return;
  if (size == 0) {
    fn(0);
    return;
  }
  // Gosper's hack: next larger integer with the same popcount.
  const std::uint64_t limit = std::uint64_t{1} << count;
  std::uint64_t s = (std::uint64_t{1} << size) - 1;
  while (s < limit) {
    fn(static_cast<PlayerSet>(s));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

StrengthMatrix::StrengthMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 || entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(ErrorCode::kShape, "strength matrix entry count does not match " + std::to_string(rows) + "x" +
                                       std::to_string(cols));
  }
}

StrengthMatrix StrengthMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw Error(ErrorCode::kShape, "P row " + std::to_string(i + 1) + " has " +
                                         std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                         " entries, expected " + std::to_string(n));
    }
    entries.insert(entries.end(), rows[static_cast<std::size_t>(i)].begin(), rows[static_cast<std::size_t>(i)].end());
  }
  return StrengthMatrix(m, n, std::move(entries));
}

std::vector<Rational> StrengthMatrix::row(int i) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i) * cols_;
  return {first, first + cols_};
}

std::vector<Rational> StrengthMatrix::col(int j) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

bool UtilityTable::antisymmetric() const {
  const int T = rounds();
  for (int t = 0; t <= T; ++t) {
    if (at(t) + at(T - t) != 0) return false;
  }
  return true;
}

bool UtilityTable::monotone() const {
  for (int t = 0; t + 1 <= rounds(); ++t) {
    if (at(t + 1) < at(t)) return false;
  }
  return true;
}

UtilityTable utility_ue(int rounds) {
  if (rounds < 1) throw Error(ErrorCode::kSize, "T must be at least 1");
  std::vector<Rational> v;
  for (int t = 0; t <= rounds; ++t) v.push_back(Rational(t) - Rational(rounds, 2));
  return UtilityTable(std::move(v));
}

UtilityTable utility_um(int rounds) {
  if (rounds < 1) throw Error(ErrorCode::kSize, "T must be at least 1");
  std::vector<Rational> v;
  for (int t = 0; t <= rounds; ++t) {
    const int twice = 2 * t;
    v.emplace_back(twice > rounds ? 1 : (twice == rounds ? 0 : -1));
  }
  return UtilityTable(std::move(v));
}

ValidatedSpec validate_spec(const GameSpec& spec) {
  const int m = spec.m();
  const int n = spec.n();
  if (m < 1 || n < 1) throw Error(ErrorCode::kSize, "P must have at least one row and one column");
  if (m > kMaxPlayers || n > kMaxPlayers) {
    throw Error(ErrorCode::kSize, "team size exceeds " + std::to_string(kMaxPlayers) + " players");
  }
  if (spec.rounds < 1) throw Error(ErrorCode::kSize, "T must be at least 1");
  if (spec.rounds > std::min(m, n)) {
    throw Error(ErrorCode::kSize, "T=" + std::to_string(spec.rounds) + " exceeds min(m, n)=" +
                                      std::to_string(std::min(m, n)));
  }
  if (spec.utility.rounds() != spec.rounds) {
    throw Error(ErrorCode::kShape, "U has " + std::to_string(spec.utility.values().size()) +
                                       " entries, expected T+1=" + std::to_string(spec.rounds + 1));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& p = spec.strength.at(i, j);
      if (p < 0 || p > 1) {
        throw Error(ErrorCode::kRange, "P[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                           "]=" + p.str() + " outside [0, 1]");
      }
    }
  }
  return {spec, spec.utility.antisymmetric()};
}

BehavioralStrategy PureAdaptiveStrategy::to_behavioral() const {
  BehavioralStrategy out;
  out.team = team;
  out.moves.reserve(moves.size());
  for (const auto& [key, player] : moves) out.moves.emplace(key, Mixture{{player, Rational(1)}});
  return out;
}

void check_mixture(const GameSpec& spec, Team team, const ClassKey& key, const Mixture& mix) {
  const PlayerSet played = key.played(team);
  const int count = spec.team_size(team);
  Rational total;
  for (const auto& [player, weight] : mix) {
    if (player < 0 || player >= count || contains(played, player)) {
      throw Error(ErrorCode::kCoverage, "team " + std::to_string(team_number(team)) + " assigns weight to player " +
                                            std::to_string(player + 1) + " which is not available");
    }
    if (weight.sign() < 0) throw Error(ErrorCode::kCoverage, "negative weight in mixture");
    total += weight;
  }
  if (total != 1) throw Error(ErrorCode::kCoverage, "mixture weights sum to " + total.str());
}

}  // namespace teamcomp
