#include "pmc/matrix.hpp"

namespace pmc {

Matrix::Matrix(Universe u, int r, int c, std::vector<int> e)
    : universe(u), rows(r), cols(c), entries(std::move(e)) {
  require(rows >= 1, "matrix: rows must be >= 1");
  require(cols >= 0, "matrix: cols must be >= 0");
  require(entries.size() == static_cast<std::size_t>(rows) *
                                static_cast<std::size_t>(cols),
          "matrix: entries length " + std::to_string(entries.size()) +
              " does not match rows*cols = " + std::to_string(rows * cols));
  for (int v : entries)
    require(v >= 0 && v < u.size, "matrix: entry out of universe");
}

std::vector<int> Matrix::row(int r) const {
  std::vector<int> out(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
  return out;
}

std::vector<int> Matrix::column(int c) const {
  std::vector<int> out(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
  return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  require(a.universe == b.universe, "hcat: universe mismatch");
  require(a.rows == b.rows, "hcat: row count mismatch");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(a.rows * (a.cols + b.cols)));
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) entries.push_back(a.at(r, c));
    for (int c = 0; c < b.cols; ++c) entries.push_back(b.at(r, c));
  }
  return Matrix(a.universe, a.rows, a.cols + b.cols, std::move(entries));
}

Matrix column_range(const Matrix& m, int first, int count) {
  require(first >= 0 && count >= 0 && first + count <= m.cols,
          "column_range: window out of range");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(m.rows * count));
  for (int r = 0; r < m.rows; ++r)
    for (int c = first; c < first + count; ++c) entries.push_back(m.at(r, c));
  return Matrix(m.universe, m.rows, count, std::move(entries));
}

Matrix single_column(Universe u, const std::vector<int>& column) {
  return Matrix(u, static_cast<int>(column.size()), 1, column);
}

}  // namespace pmc
