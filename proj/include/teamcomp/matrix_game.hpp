#pragma once

#include <span>
#include <vector>

#include "teamcomp/rational.hpp"

namespace teamcomp {

// Zero-sum payoff matrix; the row player maximizes.
class MatrixGame {
 public:
  MatrixGame() = default;
  MatrixGame(int rows, int cols, std::vector<Rational> cells);
  static MatrixGame from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return cells_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<Rational>& cells() const { return cells_; }

  friend bool operator==(const MatrixGame&, const MatrixGame&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> cells_;
};

struct MatrixSolution {
  Rational value;
  std::vector<Rational> row_strategy;
  std::vector<Rational> col_strategy;
};

// Exact minimax value and one pair of optimal mixed strategies. Games with a
// pure saddle point return the first maximin row and first minimax column;
// all others go through a primal simplex with Bland's rule, so the output is
// a deterministic function of the input. Throws Error{kShape} on an empty
// matrix.
MatrixSolution solve_matrix(const MatrixGame& game);

// M[i][c] >= M[j][c] for every column c. Throws Error{kIndex}.
bool row_dominates(const MatrixGame& game, int i, int j);
// M[r][i] <= M[r][j] for every row r, i.e. column i is at least as good as
// column j for the minimizer. Throws Error{kIndex}.
bool col_dominates(const MatrixGame& game, int i, int j);

// max_i sum_j y_j M[i][j]. Throws Error{kDist} unless y is a distribution.
Rational best_row_response_value(const MatrixGame& game, std::span<const Rational> col_strategy);
// min_j sum_i x_i M[i][j]. Throws Error{kDist} unless x is a distribution.
Rational best_col_response_value(const MatrixGame& game, std::span<const Rational> row_strategy);

}  // namespace teamcomp
