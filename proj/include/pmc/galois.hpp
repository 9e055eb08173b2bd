// The preservation relation f ▷ Γ and both directions of the induced Galois
// connection at desk scale: Pol by exhaustive table enumeration, the
// invariant side as a least preserved superset, and the separating-collection
// construction that witnesses non-membership in a preclone closure.
#pragma once

#include <optional>

#include "pmc/collection.hpp"
#include "pmc/ops.hpp"

namespace pmc {

// [M_1 | f M_2 | M_3]: columns [start, start+arity) of m replaced by the
// single column obtained by applying f to the rows of that window.
Matrix apply_to_window(const Operation& f, const Matrix& m, int start);

struct PreservationWitness {
  Matrix matrix;      // a member of the collection
  int window_start;   // replacing this window escapes the collection
};

// First violating (matrix, window) in set/column order, or nullopt when f
// preserves g. Exact on breadth-bounded collections: window replacement
// never increases the column count.
std::optional<PreservationWitness> preservation_violation(
    const Operation& f, const MatrixCollection& g);

bool preserves(const Operation& f, const MatrixCollection& g);

// All operations of arity <= max_arity that preserve every collection in
// `collections`. Tables are enumerated arity by arity with early pruning on
// the first violated collection.
OperationSet pol(Universe u, const std::vector<MatrixCollection>& collections,
                 int max_arity, const Limits& limits = {}, int jobs = 1);

// Least superset of `seed` preserved by every member of fs: the fixpoint of
// window replacement. Terminates because replacement never adds columns and
// the breadth-bounded matrix universe is finite.
MatrixCollection inv_closure(const OperationSet& fs,
                             const MatrixCollection& seed);

struct SeparationResult {
  bool separable;              // false means g lies in the bounded closure
  MatrixCollection collection; // Γ built from block images of base_matrix
  Matrix base_matrix;          // M_*: all of A^m as rows, lexicographic
  Matrix target_column;        // g applied to the rows of M_*
};

// Builds Γ = {[h_1 M_1 | ... | h_r M_r]} over all ordered partitions of
// M_*'s columns into consecutive blocks, with each block mapped by a member
// of preclone_closure(fs, arity(g)) of matching arity. Every closure member
// preserves Γ; g fails to preserve it exactly when g is not in the closure.
SeparationResult separating_collection(const OperationSet& fs,
                                       const Operation& g,
                                       const Limits& limits = {});

struct CharacterizeReport {
  bool equal;
  std::vector<Operation> only_in_pol;
  std::vector<Operation> only_in_closure;
};

// Compares pol(ms, max_arity) with preclone_closure(fs, max_arity).
CharacterizeReport characterize_check(const OperationSet& fs,
                                      const std::vector<MatrixCollection>& ms,
                                      int max_arity, const Limits& limits = {},
                                      int jobs = 1);

// All matrix collections of the given arity and breadth <= max_breadth that
// are preserved by every member of fs, i.e. the collection side of the
// Galois connection evaluated exhaustively at bounds. Deterministic order.
// Throws CapExceeded when the matrix universe exceeds 63 entries or the
// family exceeds limits.max_family.
std::vector<MatrixCollection> preserved_family(const OperationSet& fs,
                                               int arity, int max_breadth,
                                               const Limits& limits = {});

// pol applied to the family of ALL fs-preserved collections of arity
// <= max_rows and breadth <= max_breadth, computed without materializing the
// family: a candidate belongs iff each of its window replacements stays
// inside the replacement-reachability closure of the source matrix.
OperationSet pol_of_preserved(const OperationSet& fs, int max_rows,
                              int max_breadth, int max_arity,
                              const Limits& limits = {});

}  // namespace pmc
