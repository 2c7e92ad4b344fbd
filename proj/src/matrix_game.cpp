#include "teamcomp/matrix_game.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "teamcomp/error.hpp"

namespace teamcomp {
namespace {

void check_distribution(std::span<const Rational> weights, std::size_t expected, const char* what) {
  if (weights.size() != expected) {
    throw Error(ErrorCode::kDist, std::string(what) + " has " + std::to_string(weights.size()) +
                                      " weights, expected " + std::to_string(expected));
  }
  Rational total;
  for (const auto& w : weights) {
    if (w.sign() < 0) throw Error(ErrorCode::kDist, std::string(what) + " has a negative weight");
    total += w;
  }
  if (total != 1) throw Error(ErrorCode::kDist, std::string(what) + " sums to " + total.str());
}

std::optional<MatrixSolution> pure_saddle(const MatrixGame& g) {
  const int r = g.rows();
  const int c = g.cols();
  int best_row = 0;
  Rational maximin;
  for (int i = 0; i < r; ++i) {
    Rational row_min = g.at(i, 0);
    for (int j = 1; j < c; ++j) row_min = min(row_min, g.at(i, j));
    if (i == 0 || row_min > maximin) {
      maximin = row_min;
      best_row = i;
    }
  }
  int best_col = 0;
  Rational minimax;
  for (int j = 0; j < c; ++j) {
    Rational col_max = g.at(0, j);
    for (int i = 1; i < r; ++i) col_max = max(col_max, g.at(i, j));
    if (j == 0 || col_max < minimax) {
      minimax = col_max;
      best_col = j;
    }
  }
  if (maximin != minimax) return std::nullopt;
  MatrixSolution s;
  s.value = maximin;
  s.row_strategy.assign(static_cast<std::size_t>(r), Rational(0));
  s.col_strategy.assign(static_cast<std::size_t>(c), Rational(0));
  s.row_strategy[static_cast<std::size_t>(best_row)] = 1;
  s.col_strategy[static_cast<std::size_t>(best_col)] = 1;
  return s;
}

// Solves max sum(q) s.t. M' q <= 1, q >= 0 where M' = M + shift > 0. The
// optimum z gives value 1/z - shift, q/z is the column strategy and the
// slack duals divided by z are the row strategy.
MatrixSolution simplex(const MatrixGame& g) {
  const int r = g.rows();
  const int c = g.cols();
  Rational lowest = g.at(0, 0);
  for (const auto& x : g.cells()) lowest = min(lowest, x);
  const Rational shift = Rational(1) - lowest;

  const int width = c + r;  // decision variables then slacks; rhs stored separately
  std::vector<std::vector<Rational>> tab(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(width)));
  std::vector<Rational> rhs(static_cast<std::size_t>(r), Rational(1));
  std::vector<int> basis(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    auto& row = tab[static_cast<std::size_t>(i)];
    for (int j = 0; j < c; ++j) row[static_cast<std::size_t>(j)] = g.at(i, j) + shift;
    row[static_cast<std::size_t>(c + i)] = 1;
    basis[static_cast<std::size_t>(i)] = c + i;
  }
  std::vector<Rational> reduced(static_cast<std::size_t>(width));
  for (int j = 0; j < c; ++j) reduced[static_cast<std::size_t>(j)] = 1;
  Rational neg_objective;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (reduced[static_cast<std::size_t>(j)].sign() > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < r; ++i) {
      const Rational& a = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (a.sign() <= 0) continue;
      Rational ratio = rhs[static_cast<std::size_t>(i)] / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // Every column of M' is strictly positive, so the LP is bounded.
    if (leave < 0) throw std::logic_error("simplex: unbounded direction in a bounded program");

    auto& prow = tab[static_cast<std::size_t>(leave)];
    const Rational pivot = prow[static_cast<std::size_t>(enter)];
    for (auto& x : prow) x /= pivot;
    rhs[static_cast<std::size_t>(leave)] /= pivot;
    for (int i = 0; i < r; ++i) {
      if (i == leave) continue;
      auto& row = tab[static_cast<std::size_t>(i)];
      const Rational f = row[static_cast<std::size_t>(enter)];
      if (f.sign() == 0) continue;
      for (int j = 0; j < width; ++j) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
      rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(leave)];
    }
    const Rational f = reduced[static_cast<std::size_t>(enter)];
    for (int j = 0; j < width; ++j) reduced[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    neg_objective -= f * rhs[static_cast<std::size_t>(leave)];
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  const Rational z = -neg_objective;
  MatrixSolution s;
  s.value = Rational(1) / z - shift;
  s.col_strategy.assign(static_cast<std::size_t>(c), Rational(0));
  for (int i = 0; i < r; ++i) {
    const int var = basis[static_cast<std::size_t>(i)];
    if (var < c) s.col_strategy[static_cast<std::size_t>(var)] = rhs[static_cast<std::size_t>(i)] / z;
  }
  s.row_strategy.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) s.row_strategy[static_cast<std::size_t>(i)] = -reduced[static_cast<std::size_t>(c + i)] / z;
  return s;
}

}  // namespace

MatrixGame::MatrixGame(int rows, int cols, std::vector<Rational> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::kShape, "matrix game needs at least one row and one column");
  if (cells_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error(ErrorCode::kShape, "matrix cell count does not match its shape");
  }
}

MatrixGame MatrixGame::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::kShape, "empty matrix game");
  const auto cols = rows.front().size();
  std::vector<Rational> cells;
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorCode::kShape, "ragged matrix game");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return MatrixGame(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(cells));
}

MatrixSolution solve_matrix(const MatrixGame& game) {
  if (game.rows() < 1 || game.cols() < 1) throw Error(ErrorCode::kShape, "empty matrix game");
  MatrixSolution s;
  if (auto saddle = pure_saddle(game)) {
    s = std::move(*saddle);
  } else {
    s = simplex(game);
  }
  if (best_col_response_value(game, s.row_strategy) != s.value ||
      best_row_response_value(game, s.col_strategy) != s.value) {
    throw std::logic_error("solve_matrix: duality certificate failed");
  }
  return s;
}

bool row_dominates(const MatrixGame& game, int i, int j) {
  if (i < 0 || i >= game.rows() || j < 0 || j >= game.rows()) {
    throw Error(ErrorCode::kIndex, "row index out of range");
  }
  for (int c = 0; c < game.cols(); ++c) {
    if (game.at(i, c) < game.at(j, c)) return false;
  }
  return true;
}

bool col_dominates(const MatrixGame& game, int i, int j) {
  if (i < 0 || i >= game.cols() || j < 0 || j >= game.cols()) {
    throw Error(ErrorCode::kIndex, "column index out of range");
  }
  for (int r = 0; r < game.rows(); ++r) {
    if (game.at(r, i) > game.at(r, j)) return false;
  }
  return true;
}

Rational best_row_response_value(const MatrixGame& game, std::span<const Rational> col_strategy) {
  check_distribution(col_strategy, static_cast<std::size_t>(game.cols()), "column strategy");
  Rational best;
  for (int i = 0; i < game.rows(); ++i) {
    Rational v;
    for (int j = 0; j < game.cols(); ++j) {
      if (col_strategy[static_cast<std::size_t>(j)].sign() != 0) v += col_strategy[static_cast<std::size_t>(j)] * game.at(i, j);
    }
    if (i == 0 || v > best) best = std::move(v);
  }
  return best;
}

Rational best_col_response_value(const MatrixGame& game, std::span<const Rational> row_strategy) {
  check_distribution(row_strategy, static_cast<std::size_t>(game.rows()), "row strategy");
  Rational best;
  for (int j = 0; j < game.cols(); ++j) {
    Rational v;
    for (int i = 0; i < game.rows(); ++i) {
      if (row_strategy[static_cast<std::size_t>(i)].sign() != 0) v += row_strategy[static_cast<std::size_t>(i)] * game.at(i, j);
    }
    if (j == 0 || v < best) best = std::move(v);
  }
  return best;
}

}  // namespace teamcomp
