// Finite universes, operation tables, projections, superposition and
// composition, and bounded-arity preclone closure.
//
// An n-ary operation on A = {0,...,k-1} is stored as a value table of length
// k^n, indexed lexicographically by the argument tuple with the last argument
// varying fastest. Operations of distinct arity are distinct objects even
// when their tables describe "the same" behavior.
#pragma once

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pmc/common.hpp"

namespace pmc {

// The base set A = {0,...,size-1}. Never empty.
struct Universe {
  int size;

  explicit Universe(int k) : size(k) {
    require(k >= 1, "universe: size must be >= 1");
  }
  friend auto operator<=>(const Universe&, const Universe&) = default;
};

// Number of entries in an arity-n table over u, guarded against blowup.
std::uint64_t table_length(const Universe& u, int arity,
                           const Limits& limits = {});

struct Operation {
  Universe universe;
  int arity;                // >= 1; nullary operations do not exist
  std::vector<int> table;   // length k^arity, entries in {0,...,k-1}

  Operation(Universe u, int arity, std::vector<int> table);

  int eval(std::span<const int> args) const;

  friend auto operator<=>(const Operation&, const Operation&) = default;
};

// The i-th n-ary projection (i is 1-based, matching x_i^(n)).
Operation make_projection(Universe u, int arity, int index);

// Superposition f * (g_1,...,g_n): each inner operation consumes its own
// consecutive block of arguments; result arity is the sum of inner arities.
Operation superpose(const Operation& f, const std::vector<Operation>& gs);

// Clone-style composition f o (g_1,...,g_n) with all inner operations of the
// same arity, applied pointwise.
Operation compose(const Operation& f, const std::vector<Operation>& gs);

struct OperationSet {
  Universe universe;
  std::set<Operation> ops;  // deduplicated by (arity, table)

  explicit OperationSet(Universe u) : universe(u) {}

  void insert(const Operation& f);
  bool contains(const Operation& f) const { return ops.count(f) > 0; }
  std::size_t size() const { return ops.size(); }
  std::vector<Operation> of_arity(int arity) const;

  friend auto operator<=>(const OperationSet&, const OperationSet&) = default;
};

// All k^(k^arity) operation tables of the given arity, in lexicographic table
// order. Throws CapExceeded when the count exceeds limits.max_tables.
std::vector<Operation> enumerate_operations(Universe u, int arity,
                                            const Limits& limits = {});

// Smallest superset of {f in F : arity(f) <= max_arity} plus x_1^(1) that is
// closed under every superposition whose result arity stays <= max_arity.
// The arity-<=N slice of the unbounded closure is produced exactly: a
// superposition result has arity >= each participant's arity, so no
// intermediate above the bound is ever needed.
OperationSet preclone_closure(const OperationSet& fs, int max_arity,
                              const Limits& limits = {});

struct SuperpositionGap {
  std::string reason;                 // "missing neutral element" or "superposition escapes"
  std::optional<Operation> outer;
  std::vector<Operation> inner;
  std::optional<Operation> result;    // the escaping operation, when applicable
};

struct ClosureCheck {
  bool closed = true;
  std::optional<SuperpositionGap> gap;
};

// Decision form of the closure property: true iff x_1^(1) is a member and
// every admissible superposition with result arity <= max_arity lands in fs.
ClosureCheck is_closed_under_superposition(const OperationSet& fs,
                                           int max_arity);

}  // namespace pmc
