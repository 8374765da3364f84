#include "telescope/linear_solve.hpp"

#include <stdexcept>

namespace telescope {

std::optional<RatFuncVector> solve_linear(const RatFuncMatrix& a, const RatFuncVector& rhs) {
  const std::size_t rows = a.size();
  if (rhs.size() != rows) {
    throw std::invalid_argument("solve_linear: rhs has " + std::to_string(rhs.size()) +
                                " entries for " + std::to_string(rows) + " rows");
  }
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw std::invalid_argument("solve_linear: ragged matrix");
    }
  }

  // Augmented copy.
  std::vector<RatFuncVector> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = a[i];
    m[i].push_back(rhs[i]);
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Prefer the pivot of lowest degree to limit growth.
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) {
        continue;
      }
      if (best == rows ||
          m[i][c].num().degree() + m[i][c].den().degree() <
              m[best][c].num().degree() + m[best][c].den().degree()) {
        best = i;
      }
    }
    if (best == rows) {
      continue;
    }
    std::swap(m[r], m[best]);
    const RatFunc inv = m[r][c].inverse();
    for (std::size_t j = c; j <= cols; ++j) {
      if (!m[r][j].is_zero()) {
        m[r][j] *= inv;
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) {
        continue;
      }
      const RatFunc factor = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) {
        if (!m[r][j].is_zero()) {
          m[i][j] -= factor * m[r][j];
        }
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < rows; ++i) {
    if (!m[i][cols].is_zero()) {
      return std::nullopt;
    }
  }

  RatFuncVector x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    x[pivot_cols[i]] = m[i][cols];
  }
  return x;
}

}  // namespace telescope
