#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls solve_matrix or the class-based DP.

#include <optional>
#include <vector>

#include "teamcomp/model.hpp"
#include "teamcomp/rational.hpp"

namespace teamcomp::oracle {

using Grid = std::vector<std::vector<Rational>>;

// Solves A x = b by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_linear(Grid a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].sign() == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].sign() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// Value of a zero-sum game by support enumeration: every extreme optimal
// row strategy solves x^T M[R, C] = v 1, sum(x) = 1 for some square
// subsystem (Shapley-Snow), so the best guarantee among nonnegative
// solutions is the value.
inline Rational matrix_value(const Grid& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  std::optional<Rational> best;
  for (int s = 1; s <= std::min(rows, cols); ++s) {
    for_each_subset(rows, s, [&](PlayerSet rmask) {
      const auto rsel = unplayed(~rmask, rows);
      for_each_subset(cols, s, [&](PlayerSet cmask) {
        const auto csel = unplayed(~cmask, cols);
        // Unknowns: x_r for r in rsel, then v.
        Grid a(static_cast<std::size_t>(s + 1), std::vector<Rational>(static_cast<std::size_t>(s + 1)));
        std::vector<Rational> b(static_cast<std::size_t>(s + 1));
        for (int k = 0; k < s; ++k) {
          for (int r = 0; r < s; ++r) a[k][r] = m[rsel[r]][csel[k]];
          a[k][s] = -1;
        }
        for (int r = 0; r < s; ++r) a[s][r] = 1;
        b[s] = 1;
        auto sol = solve_linear(a, b);
        if (!sol) return;
        for (int r = 0; r < s; ++r) {
          if ((*sol)[r].sign() < 0) return;
        }
        std::optional<Rational> guarantee;
        for (int j = 0; j < cols; ++j) {
          Rational v;
          for (int r = 0; r < s; ++r) v += (*sol)[r] * m[rsel[r]][j];
          if (!guarantee || v < *guarantee) guarantee = v;
        }
        if (!best || *guarantee > *best) best = guarantee;
      });
    });
  }
  return *best;
}

// Closed form for 2x2: saddle point if one exists, else (ad - bc)/(a+d-b-c).
inline Rational two_by_two_value(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  const Rational maximin = max(min(a, b), min(c, d));
  const Rational minimax = min(max(a, c), max(b, d));
  if (maximin == minimax) return maximin;
  return (a * d - b * c) / (a + d - b - c);
}

// Game value by recursion over raw histories (ordered sequences of
// pairings and outcomes), with no class merging.
class GameTree {
 public:
  explicit GameTree(const GameSpec& spec) : spec_(spec) {}

  Rational value() { return eval(0, 0, 0); }

 private:
  Rational eval(PlayerSet used1, PlayerSet used2, int wins) {
    const int round = set_size(used1);
    if (round == spec_.rounds) return spec_.utility.at(wins);
    const auto rows = unplayed(used1, spec_.m());
    const auto cols = unplayed(used2, spec_.n());
    Grid g;
    for (int a : rows) {
      std::vector<Rational> row;
      for (int b : cols) {
        const Rational& p = spec_.strength.at(a, b);
        Rational cell;
        if (p.sign() != 0) cell += p * eval(with(used1, a), with(used2, b), wins + 1);
        if (p != 1) cell += (Rational(1) - p) * eval(with(used1, a), with(used2, b), wins);
        row.push_back(cell);
      }
      g.push_back(std::move(row));
    }
    return matrix_value(g);
  }

  const GameSpec& spec_;
};

inline Rational game_tree_value(const GameSpec& spec) { return GameTree(spec).value(); }

}  // namespace teamcomp::oracle
