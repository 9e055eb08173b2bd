// Breadth-bounded matrix collections: the finite representative Γ^(B) of a
// possibly infinite collection Γ. Every operator here maps breadth-<=B input
// to breadth-<=B output, so per-breadth reasoning is exact.
#pragma once

#include <set>
#include <vector>

#include "pmc/matrix.hpp"

namespace pmc {

struct MatrixCollection {
  Universe universe;
  int arity;          // common row count m >= 1
  int breadth_bound;  // members have <= breadth_bound columns
  std::set<Matrix> matrices;

  MatrixCollection(Universe u, int arity, int breadth_bound);

  void insert(const Matrix& m);
  // Set-containment test; rejects matrices of the wrong row count.
  bool contains(const Matrix& m) const;
  std::size_t size() const { return matrices.size(); }
  // Maximum column count over members; 0 for the empty collection.
  int breadth() const;

  // Value identity is (universe, arity, matrices); breadth_bound is a
  // representation bound, not part of the set being represented.
  friend bool operator==(const MatrixCollection& a, const MatrixCollection& b);
  friend bool operator<(const MatrixCollection& a, const MatrixCollection& b);
};

bool is_subset(const MatrixCollection& inner, const MatrixCollection& outer);

// All rows x cols matrices over u, in entry-lexicographic order.
std::vector<Matrix> enumerate_matrices(Universe u, int rows, int cols,
                                       const Limits& limits = {});

// The trivial collection Ω_m^(p): all m-row matrices with at most p columns.
MatrixCollection make_trivial(Universe u, int arity, int breadth,
                              const Limits& limits = {});

// The empty collection; breadth 0 by convention.
MatrixCollection make_empty(Universe u, int arity);

// The binary equality collection E_2 restricted to breadth B: all two-row
// matrices with <= B columns whose rows are identical. Contains the empty
// matrix (its rows are vacuously identical).
MatrixCollection make_equality(Universe u, int breadth,
                               const Limits& limits = {});

// Γ^(p) = Γ ∩ Ω_m^(p).
MatrixCollection breadth_restrict(const MatrixCollection& g, int p);

MatrixCollection unite(const MatrixCollection& a, const MatrixCollection& b);
MatrixCollection unite(const std::vector<MatrixCollection>& gs);
MatrixCollection intersect(const MatrixCollection& a,
                           const MatrixCollection& b);
MatrixCollection intersect(const std::vector<MatrixCollection>& gs);

// Γ/N = {M : [M|N] ∈ Γ} and N\Γ = {M : [N|M] ∈ Γ}.
MatrixCollection right_quotient(const MatrixCollection& g, const Matrix& n);
MatrixCollection left_quotient(const Matrix& n, const MatrixCollection& g);

}  // namespace pmc
