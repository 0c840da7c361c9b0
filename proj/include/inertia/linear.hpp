#pragma once

#include <cstddef>
#include <vector>

#include "inertia/rational.hpp"

namespace inertia {

enum class SolveStatus { inconsistent, unique, underdetermined };

struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> values;  // meaningful only when status == unique
};

// Gauss-Jordan over the rationals. `rows` are augmented: `unknowns`
// coefficients followed by the right-hand side. Exact arithmetic, so rank
// decisions are clean — no pivot tolerance needed.
inline LinearSolution solve_linear(std::vector<std::vector<Rational>> rows,
                                   std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[row]);
    const Rational inv = rows[row][col];
    for (std::size_t j = col; j <= unknowns; ++j) rows[row][j] /= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t j = col; j <= unknowns; ++j) rows[r][j] -= factor * rows[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (rows[r][unknowns] != 0) return {SolveStatus::inconsistent, {}};
  if (pivot_col_of_row.size() < unknowns) return {SolveStatus::underdetermined, {}};
  std::vector<Rational> x(unknowns);
  for (std::size_t r = 0; r < unknowns; ++r) x[pivot_col_of_row[r]] = rows[r][unknowns];
  return {SolveStatus::unique, std::move(x)};
}

}  // namespace inertia
