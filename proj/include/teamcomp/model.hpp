#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "teamcomp/error.hpp"
#include "teamcomp/rational.hpp"

namespace teamcomp {

// Per-team player cap. Played-player sets are 32-bit masks, so a class key
// packs into 64 bits plus the win count.
inline constexpr int kMaxPlayers = 20;

using PlayerSet = std::uint32_t;

enum class Team { kOne = 1, kTwo = 2 };

inline Team opponent(Team t) { return t == Team::kOne ? Team::kTwo : Team::kOne; }
inline int team_number(Team t) { return static_cast<int>(t); }

inline int set_size(PlayerSet s) { return std::popcount(s); }
inline bool contains(PlayerSet s, int player) { return (s >> player) & 1U; }
inline PlayerSet with(PlayerSet s, int player) { return s | (PlayerSet{1} << player); }
inline PlayerSet full_set(int count) { return count >= 32 ? ~PlayerSet{0} : ((PlayerSet{1} << count) - 1); }

// Players in {0..count-1} not in `played`, ascending.
std::vector<int> unplayed(PlayerSet played, int count);

// Calls fn(mask) for every subset of {0..count-1} with exactly `size`
// members, in increasing numeric order.
void for_each_subset(int count, int size, const std::function<void(PlayerSet)>& fn);

// m x n win probabilities from Team 1's perspective, row-major.
class StrengthMatrix {
 public:
  StrengthMatrix() = default;
  StrengthMatrix(int rows, int cols, std::vector<Rational> entries);
  static StrengthMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
  std::vector<Rational> row(int i) const;
  std::vector<Rational> col(int j) const;

  friend bool operator==(const StrengthMatrix&, const StrengthMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

// Team 1's utility indexed by its win count t in 0..T. Team 2 receives the
// negation.
class UtilityTable {
 public:
  UtilityTable() = default;
  explicit UtilityTable(std::vector<Rational> values) : values_(std::move(values)) {}

  int rounds() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& at(int t) const { return values_.at(static_cast<std::size_t>(t)); }
  const std::vector<Rational>& values() const { return values_; }

  // U(t) + U(T - t) == 0 for every t.
  bool antisymmetric() const;
  // U(t + 1) >= U(t) for every t.
  bool monotone() const;

  friend bool operator==(const UtilityTable&, const UtilityTable&) = default;

 private:
  std::vector<Rational> values_;
};

// U_E(t) = t - T/2.
UtilityTable utility_ue(int rounds);
// U_M(t) = sign(t - T/2).
UtilityTable utility_um(int rounds);

struct GameSpec {
  int rounds = 0;
  StrengthMatrix strength;
  UtilityTable utility;

  int m() const { return strength.rows(); }
  int n() const { return strength.cols(); }
  int team_size(Team t) const { return t == Team::kOne ? m() : n(); }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

struct ValidatedSpec {
  GameSpec spec;
  bool antisymmetric = false;
};

// Checks every GameSpec invariant. Throws Error{kRange|kSize|kShape}.
ValidatedSpec validate_spec(const GameSpec& spec);

// History class (X, Y, w). The round index is |X|.
struct ClassKey {
  PlayerSet played1 = 0;
  PlayerSet played2 = 0;
  int wins = 0;

  int level() const { return set_size(played1); }
  PlayerSet played(Team t) const { return t == Team::kOne ? played1 : played2; }

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

struct ClassKeyHash {
  std::size_t operator()(const ClassKey& k) const noexcept {
    std::uint64_t h = (std::uint64_t{k.played1} << 32) | k.played2;
    h ^= static_cast<std::uint64_t>(k.wins) * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

template <typename V>
using ClassMap = std::unordered_map<ClassKey, V, ClassKeyHash>;

// Distribution over one team's players: (player index, weight) pairs with
// strictly positive weights, ascending by player.
using Mixture = std::vector<std::pair<int, Rational>>;

struct BehavioralStrategy {
  Team team = Team::kOne;
  ClassMap<Mixture> moves;

  const Mixture* find(const ClassKey& key) const {
    auto it = moves.find(key);
    return it == moves.end() ? nullptr : &it->second;
  }
};

struct PureAdaptiveStrategy {
  Team team = Team::kOne;
  ClassMap<int> moves;

  BehavioralStrategy to_behavioral() const;
};

// Throws Error{kCoverage} unless `mix` is a distribution supported on the
// players of `team` that have not yet played at `key`.
void check_mixture(const GameSpec& spec, Team team, const ClassKey& key, const Mixture& mix);

}  // namespace teamcomp
