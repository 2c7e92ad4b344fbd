#include "teamcomp/fixtures.hpp"

#include <charconv>
#include <string>

namespace teamcomp {
namespace {

StrengthMatrix integer_matrix(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> out;
    for (int v : row) out.emplace_back(v);
    r.push_back(std::move(out));
  }
  return StrengthMatrix::from_rows(r);
}

int parse_rounds_suffix(std::string_view name, std::string_view prefix) {
  const auto digits = name.substr(prefix.size());
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
    throw Error(ErrorCode::kParse, "fixture '" + std::string(name) + "' needs a positive round count");
  }
  return value;
}

}  // namespace

GameSpec card_game() {
  return {3, integer_matrix({{1, 0, 0}, {0, 1, 1}, {0, 1, 1}}), utility_um(3)};
}

GameSpec redundant_column_game() {
  return {2, integer_matrix({{0, 0, 1}, {1, 1, 0}}), utility_ue(2)};
}

GameSpec dominated_helper_game() {
  return {2, integer_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}), utility_ue(2)};
}

GameSpec diagonal_plus_dominated_game(const UtilityTable& utility) {
  return {3, integer_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), utility};
}

GameSpec diagonal_recruit_base(int rounds, int extra, const UtilityTable& utility) {
  if (rounds < 1 || extra < 0) throw Error(ErrorCode::kSize, "diagonal base needs T >= 1 and extra >= 0");
  const int n = rounds + extra;
  if (n > kMaxPlayers) throw Error(ErrorCode::kSize, "team size exceeds the player cap");
  std::vector<Rational> entries;
  for (int i = 0; i < rounds; ++i) {
    for (int j = 0; j < n; ++j) entries.emplace_back(i == j ? 1 : 0);
  }
  return {rounds, StrengthMatrix(rounds, n, std::move(entries)), utility};
}

GameSpec expected_wins_recruit_base(int rounds) { return diagonal_recruit_base(rounds, rounds - 1, utility_ue(rounds)); }

GameSpec majority_recruit_base(int rounds) { return diagonal_recruit_base(rounds, rounds / 2, utility_um(rounds)); }

GameSpec named_fixture(std::string_view name) {
  if (name == "card") return card_game();
  if (name == "ex1") return redundant_column_game();
  if (name == "ex2") return dominated_helper_game();
  if (name == "ex3") return diagonal_plus_dominated_game(utility_um(3));
  if (name.starts_with("ex4:")) return expected_wins_recruit_base(parse_rounds_suffix(name, "ex4:"));
  if (name.starts_with("ex5:")) return majority_recruit_base(parse_rounds_suffix(name, "ex5:"));
  throw Error(ErrorCode::kParse, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace teamcomp
