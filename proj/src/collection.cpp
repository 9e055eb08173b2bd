#include "pmc/collection.hpp"

#include <algorithm>

namespace pmc {

MatrixCollection::MatrixCollection(Universe u, int m, int b)
    : universe(u), arity(m), breadth_bound(b) {
  require(m >= 1, "collection: arity must be >= 1");
  require(b >= 0, "collection: breadth bound must be >= 0");
}

void MatrixCollection::insert(const Matrix& m) {
  require(m.universe == universe, "collection: universe mismatch");
  require(m.rows == arity, "collection: matrix has " + std::to_string(m.rows) +
                               " rows, collection arity is " +
                               std::to_string(arity));
  require(m.cols <= breadth_bound,
          "collection: matrix exceeds the breadth bound");
  matrices.insert(m);
}

bool MatrixCollection::contains(const Matrix& m) const {
  require(m.rows == arity, "membership: matrix has " +
                               std::to_string(m.rows) +
                               " rows, collection arity is " +
                               std::to_string(arity));
  return matrices.count(m) > 0;
}

int MatrixCollection::breadth() const {
  int b = 0;
  for (const Matrix& m : matrices) b = std::max(b, m.cols);
  return b;
}

bool operator==(const MatrixCollection& a, const MatrixCollection& b) {
  return a.universe == b.universe && a.arity == b.arity &&
         a.matrices == b.matrices;
}

bool operator<(const MatrixCollection& a, const MatrixCollection& b) {
  if (a.universe != b.universe) return a.universe < b.universe;
  if (a.arity != b.arity) return a.arity < b.arity;
  return a.matrices < b.matrices;
}

bool is_subset(const MatrixCollection& inner, const MatrixCollection& outer) {
  require(inner.arity == outer.arity && inner.universe == outer.universe,
          "is_subset: arity or universe mismatch");
  return std::includes(outer.matrices.begin(), outer.matrices.end(),
                       inner.matrices.begin(), inner.matrices.end());
}

std::vector<Matrix> enumerate_matrices(Universe u, int rows, int cols,
                                       const Limits& limits) {
  require(rows >= 1 && cols >= 0, "enumerate_matrices: bad shape");
  const std::uint64_t count = saturating_pow(
      static_cast<std::uint64_t>(u.size),
      static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols),
      limits.max_collection_size);
  if (count > limits.max_collection_size)
    throw CapExceeded("enumerating " + std::to_string(rows) + "x" +
                      std::to_string(cols) +
                      " matrices exceeds the collection cap");
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_tuple(u.size, rows * cols, [&](std::span<const int> entries) {
    out.emplace_back(u, rows, cols,
                     std::vector<int>(entries.begin(), entries.end()));
  });
  return out;
}

MatrixCollection make_trivial(Universe u, int arity, int breadth,
                              const Limits& limits) {
  require(arity >= 1, "trivial collection: arity must be >= 1");
  require(breadth >= 0, "trivial collection: breadth must be >= 0");
  std::uint64_t total = 0;
  for (int q = 0; q <= breadth; ++q) {
    total += saturating_pow(
        static_cast<std::uint64_t>(u.size),
        static_cast<std::uint64_t>(arity) * static_cast<std::uint64_t>(q),
        limits.max_collection_size);
    if (total > limits.max_collection_size)
      throw CapExceeded("trivial collection of arity " +
                        std::to_string(arity) + ", breadth " +
                        std::to_string(breadth) +
                        " exceeds the collection cap");
  }
  MatrixCollection g(u, arity, breadth);
  for (int q = 0; q <= breadth; ++q)
    for (Matrix& m : enumerate_matrices(u, arity, q, limits))
      g.matrices.insert(std::move(m));
  return g;
}

MatrixCollection make_empty(Universe u, int arity) {
  return MatrixCollection(u, arity, 0);
}

MatrixCollection make_equality(Universe u, int breadth, const Limits& limits) {
  require(breadth >= 0, "equality collection: breadth must be >= 0");
  MatrixCollection g(u, 2, breadth);
  for (int q = 0; q <= breadth; ++q) {
    for_each_tuple(u.size, q, [&](std::span<const int> row) {
      std::vector<int> entries(row.begin(), row.end());
      entries.insert(entries.end(), row.begin(), row.end());
      g.matrices.emplace(u, 2, q, std::move(entries));
    });
    if (g.size() > limits.max_collection_size)
      throw CapExceeded("equality collection exceeds the collection cap");
  }
  return g;
}

MatrixCollection breadth_restrict(const MatrixCollection& g, int p) {
  require(p >= 0, "breadth_restrict: p must be >= 0");
  MatrixCollection out(g.universe, g.arity, std::min(p, g.breadth_bound));
  for (const Matrix& m : g.matrices)
    if (m.cols <= p) out.matrices.insert(m);
  return out;
}

MatrixCollection unite(const MatrixCollection& a, const MatrixCollection& b) {
  require(a.arity == b.arity, "union: arity mismatch");
  require(a.universe == b.universe, "union: universe mismatch");
  MatrixCollection out(a.universe, a.arity,
                       std::max(a.breadth_bound, b.breadth_bound));
  out.matrices = a.matrices;
  out.matrices.insert(b.matrices.begin(), b.matrices.end());
  return out;
}

MatrixCollection unite(const std::vector<MatrixCollection>& gs) {
  require(!gs.empty(), "union: family must be nonempty");
  MatrixCollection out = gs.front();
  for (std::size_t i = 1; i < gs.size(); ++i) out = unite(out, gs[i]);
  return out;
}

MatrixCollection intersect(const MatrixCollection& a,
                           const MatrixCollection& b) {
  require(a.arity == b.arity, "intersection: arity mismatch");
  require(a.universe == b.universe, "intersection: universe mismatch");
  MatrixCollection out(a.universe, a.arity,
                       std::min(a.breadth_bound, b.breadth_bound));
  std::set_intersection(a.matrices.begin(), a.matrices.end(),
                        b.matrices.begin(), b.matrices.end(),
                        std::inserter(out.matrices, out.matrices.end()));
  return out;
}

MatrixCollection intersect(const std::vector<MatrixCollection>& gs) {
  require(!gs.empty(), "intersection: family must be nonempty");
  MatrixCollection out = gs.front();
  for (std::size_t i = 1; i < gs.size(); ++i) out = intersect(out, gs[i]);
  return out;
}

MatrixCollection right_quotient(const MatrixCollection& g, const Matrix& n) {
  require(n.rows == g.arity, "right quotient: row count mismatch");
  require(n.universe == g.universe, "right quotient: universe mismatch");
  MatrixCollection out(g.universe, g.arity,
                       std::max(0, g.breadth_bound - n.cols));
  for (const Matrix& m : g.matrices) {
    if (m.cols < n.cols) continue;
    if (column_range(m, m.cols - n.cols, n.cols) == n)
      out.matrices.insert(column_range(m, 0, m.cols - n.cols));
  }
  return out;
}

MatrixCollection left_quotient(const Matrix& n, const MatrixCollection& g) {
  require(n.rows == g.arity, "left quotient: row count mismatch");
  require(n.universe == g.universe, "left quotient: universe mismatch");
  MatrixCollection out(g.universe, g.arity,
                       std::max(0, g.breadth_bound - n.cols));
  for (const Matrix& m : g.matrices) {
    if (m.cols < n.cols) continue;
    if (column_range(m, 0, n.cols) == n)
      out.matrices.insert(column_range(m, n.cols, m.cols - n.cols));
  }
  return out;
}

}  // namespace pmc
