// Matrices over a finite universe: m rows, q >= 0 columns, row-major entries.
// The 0-column empty matrix "()" is a legal value.
#pragma once

#include <compare>
#include <vector>

#include "pmc/ops.hpp"

namespace pmc {

struct Matrix {
  Universe universe;
  int rows;                 // >= 1
  int cols;                 // >= 0
  std::vector<int> entries; // row-major, length rows*cols

  Matrix(Universe u, int rows, int cols, std::vector<int> entries);

  int at(int r, int c) const {
    return entries[static_cast<std::size_t>(r * cols + c)];
  }
  std::vector<int> row(int r) const;
  std::vector<int> column(int c) const;
  bool empty() const { return cols == 0; }

  // Ordering is (rows, cols, entries); within a collection all rows agree,
  // so members sort by (cols, entries), the canonical file order.
  friend auto operator<=>(const Matrix&, const Matrix&) = default;
};

// Horizontal concatenation [a | b].
Matrix hcat(const Matrix& a, const Matrix& b);

// The submatrix made of `count` columns starting at `first`.
Matrix column_range(const Matrix& m, int first, int count);

// A rows x 1 matrix from one column vector.
Matrix single_column(Universe u, const std::vector<int>& column);

}  // namespace pmc
