// Minor formation schemes and conjunctive/simple minors of matrix
// collections. A scheme maps each source index either to a target row or to
// an existentially quantified indeterminate; membership of a candidate
// matrix asks for per-column Skolem assignments, shared across all sources.
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pmc/collection.hpp"

namespace pmc {

// Image of one source index under h_j: a target row (int) or the name of an
// indeterminate (string).
using MinorImage = std::variant<int, std::string>;

struct MinorFormationScheme {
  int target;                               // result arity m >= 1
  std::vector<std::string> indeterminates;  // V, disjoint from row indices
  std::vector<std::vector<MinorImage>> maps;  // h_j, one entry per source index

  MinorFormationScheme(int target, std::vector<std::string> indeterminates,
                       std::vector<std::vector<MinorImage>> maps);

  std::size_t family_size() const { return maps.size(); }
  int source_arity(std::size_t j) const {
    return static_cast<int>(maps[j].size());
  }
};

// A Skolem map σ : V -> A, total on V.
using SkolemAssignment = std::map<std::string, int>;

// The m-ary conjunctive minor of `sources` via `scheme`, materialized over
// candidates with at most max_breadth columns. A candidate M belongs iff
// there are Skolem maps σ_1,...,σ_n (one per column) such that for every j
// the h_j-transformed matrix lies in sources[j].
MatrixCollection conjunctive_minor(const MinorFormationScheme& scheme,
                                   const std::vector<MatrixCollection>& sources,
                                   int max_breadth, const Limits& limits = {});

// Simple minors: each builds the canonical singleton scheme for its kind and
// delegates to conjunctive_minor.

// perm must be a bijection on the rows of g; member M's row perm[i] plays the
// role of the source's row i. The identity permutation is the identity map.
MatrixCollection permute_rows(const std::vector<int>& perm,
                              const MatrixCollection& g,
                              const Limits& limits = {});

// row_map sends each source row to a target row (surjective onto the target);
// the result holds the matrices whose row_map-expansion lies in g.
MatrixCollection identify_rows(const std::vector<int>& row_map,
                               int target_arity, const MatrixCollection& g,
                               const Limits& limits = {});

// placements injectively embeds the source rows into a larger target; rows of
// the target not hit by a placement are inessential.
MatrixCollection add_dummy_rows(const std::vector<int>& placements,
                                int target_arity, const MatrixCollection& g,
                                const Limits& limits = {});

// kept_rows lists the source rows that survive (distinct); every dropped row
// is bound to a fresh indeterminate, i.e. projected out existentially.
MatrixCollection project_rows(const std::vector<int>& kept_rows,
                              const MatrixCollection& g,
                              const Limits& limits = {});

}  // namespace pmc
