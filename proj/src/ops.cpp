#include "pmc/ops.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pmc {

std::uint64_t table_length(const Universe& u, int arity, const Limits& limits) {
  require(arity >= 1, "operation: arity must be >= 1");
  const std::uint64_t len = saturating_pow(
      static_cast<std::uint64_t>(u.size), static_cast<std::uint64_t>(arity),
      limits.max_table_length);
  if (len > limits.max_table_length)
    throw CapExceeded("operation table of arity " + std::to_string(arity) +
                      " over universe of size " + std::to_string(u.size) +
                      " exceeds the table length cap");
  return len;
}

Operation::Operation(Universe u, int n, std::vector<int> t)
    : universe(u), arity(n), table(std::move(t)) {
  const std::uint64_t expected = table_length(u, n);
  require(table.size() == expected,
          "operation: table length " + std::to_string(table.size()) +
              " does not match k^arity = " + std::to_string(expected));
  for (int v : table)
    require(v >= 0 && v < u.size, "operation: table entry out of universe");
}

int Operation::eval(std::span<const int> args) const {
  require(static_cast<int>(args.size()) == arity,
          "eval: expected " + std::to_string(arity) + " arguments, got " +
              std::to_string(args.size()));
  std::size_t index = 0;
  for (int a : args) {
    require(a >= 0 && a < universe.size, "eval: argument out of universe");
    index = index * static_cast<std::size_t>(universe.size) +
            static_cast<std::size_t>(a);
  }
  return table[index];
}

Operation make_projection(Universe u, int arity, int index) {
  require(arity >= 1, "projection: arity must be >= 1");
  require(index >= 1 && index <= arity, "projection: index out of range");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(table_length(u, arity)));
  for_each_tuple(u.size, arity, [&](std::span<const int> args) {
    table.push_back(args[static_cast<std::size_t>(index - 1)]);
  });
  return Operation(u, arity, std::move(table));
}

Operation superpose(const Operation& f, const std::vector<Operation>& gs) {
  require(static_cast<int>(gs.size()) == f.arity,
          "superpose: expected " + std::to_string(f.arity) +
              " inner operations, got " + std::to_string(gs.size()));
  int result_arity = 0;
  for (const Operation& g : gs) {
    require(g.universe == f.universe, "superpose: universe mismatch");
    result_arity += g.arity;
  }
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(table_length(f.universe, result_arity)));
  std::vector<int> outer(static_cast<std::size_t>(f.arity));
  for_each_tuple(f.universe.size, result_arity, [&](std::span<const int> args) {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      outer[i] = gs[i].eval(
          args.subspan(offset, static_cast<std::size_t>(gs[i].arity)));
      offset += static_cast<std::size_t>(gs[i].arity);
    }
    table.push_back(f.eval(outer));
  });
  return Operation(f.universe, result_arity, std::move(table));
}

Operation compose(const Operation& f, const std::vector<Operation>& gs) {
  require(static_cast<int>(gs.size()) == f.arity,
          "compose: expected " + std::to_string(f.arity) +
              " inner operations, got " + std::to_string(gs.size()));
  require(!gs.empty(), "compose: needs at least one inner operation");
  const int m = gs.front().arity;
  for (const Operation& g : gs) {
    require(g.universe == f.universe, "compose: universe mismatch");
    require(g.arity == m, "compose: inner operations must share an arity");
  }
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(table_length(f.universe, m)));
  std::vector<int> outer(static_cast<std::size_t>(f.arity));
  for_each_tuple(f.universe.size, m, [&](std::span<const int> args) {
    for (std::size_t i = 0; i < gs.size(); ++i) outer[i] = gs[i].eval(args);
    table.push_back(f.eval(outer));
  });
  return Operation(f.universe, m, std::move(table));
}

void OperationSet::insert(const Operation& f) {
  require(f.universe == universe, "operation set: universe mismatch");
  ops.insert(f);
}

std::vector<Operation> OperationSet::of_arity(int arity) const {
  std::vector<Operation> out;
  for (const Operation& f : ops)
    if (f.arity == arity) out.push_back(f);
  return out;
}

std::vector<Operation> enumerate_operations(Universe u, int arity,
                                            const Limits& limits) {
  const std::uint64_t len = table_length(u, arity, limits);
  const std::uint64_t count = saturating_pow(
      static_cast<std::uint64_t>(u.size), len, limits.max_tables);
  if (count > limits.max_tables)
    throw CapExceeded("enumerating all operations of arity " +
                      std::to_string(arity) + " over universe of size " +
                      std::to_string(u.size) + " exceeds the table cap");
  std::vector<Operation> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> table(static_cast<std::size_t>(len), 0);
  for (;;) {
    out.emplace_back(u, arity, table);
    int i = static_cast<int>(len) - 1;
    while (i >= 0 && table[static_cast<std::size_t>(i)] == u.size - 1) {
      table[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++table[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

// Enumerates tuples (g_1,...,g_n) from `pool` with sum of arities <= budget,
// invoking fn on each complete tuple. pool_by_arity[a] holds ops of arity a.
void for_each_inner_tuple(
    const std::vector<std::vector<Operation>>& pool_by_arity, int positions,
    int budget, std::vector<const Operation*>& current,
    const std::function<void(const std::vector<const Operation*>&)>& fn) {
  if (positions == 0) {
    fn(current);
    return;
  }
  // Remaining positions each need arity >= 1.
  for (int a = 1; a <= budget - (positions - 1); ++a) {
    if (a >= static_cast<int>(pool_by_arity.size())) break;
    for (const Operation& g : pool_by_arity[static_cast<std::size_t>(a)]) {
      current.push_back(&g);
      for_each_inner_tuple(pool_by_arity, positions - 1, budget - a, current,
                           fn);
      current.pop_back();
    }
  }
}

}  // namespace

OperationSet preclone_closure(const OperationSet& fs, int max_arity,
                              const Limits& limits) {
  require(max_arity >= 1, "preclone_closure: max_arity must be >= 1");
  OperationSet closure(fs.universe);
  closure.insert(make_projection(fs.universe, 1, 1));
  for (const Operation& f : fs.ops)
    if (f.arity <= max_arity) closure.insert(f);

  // Round-based fixpoint. Only combinations that involve an operation added
  // in the previous round can produce anything new, so stale combinations
  // are skipped via insertion stamps.
  std::map<Operation, int> stamp;
  int round = 0;
  for (const Operation& f : closure.ops) stamp[f] = 0;

  bool changed = true;
  while (changed) {
    changed = false;
    ++round;
    std::vector<std::vector<Operation>> by_arity(
        static_cast<std::size_t>(max_arity) + 1);
    for (const Operation& f : closure.ops)
      by_arity[static_cast<std::size_t>(f.arity)].push_back(f);

    std::vector<Operation> fresh;
    for (int n = 1; n <= max_arity; ++n) {
      for (const Operation& f : by_arity[static_cast<std::size_t>(n)]) {
        std::vector<const Operation*> tuple;
        for_each_inner_tuple(
            by_arity, n, max_arity, tuple,
            [&](const std::vector<const Operation*>& gs) {
              int newest = stamp[f];
              for (const Operation* g : gs) newest = std::max(newest, stamp[*g]);
              if (newest != round - 1) return;  // already explored
              std::vector<Operation> inner;
              inner.reserve(gs.size());
              for (const Operation* g : gs) inner.push_back(*g);
              Operation r = superpose(f, inner);
              if (!closure.contains(r)) fresh.push_back(std::move(r));
            });
      }
    }
    for (Operation& r : fresh) {
      if (!closure.contains(r)) {
        if (closure.size() >= limits.max_ops)
          throw CapExceeded("preclone_closure exceeds the operation cap");
        stamp[r] = round;
        closure.insert(r);
        changed = true;
      }
    }
  }
  return closure;
}

ClosureCheck is_closed_under_superposition(const OperationSet& fs,
                                           int max_arity) {
  require(max_arity >= 1, "is_closed_under_superposition: max_arity >= 1");
  const Operation neutral = make_projection(fs.universe, 1, 1);
  if (!fs.contains(neutral)) {
    ClosureCheck check;
    check.closed = false;
    check.gap = SuperpositionGap{"missing neutral element", std::nullopt, {},
                                 std::nullopt};
    return check;
  }
  std::vector<std::vector<Operation>> by_arity(
      static_cast<std::size_t>(max_arity) + 1);
  for (const Operation& f : fs.ops)
    if (f.arity <= max_arity)
      by_arity[static_cast<std::size_t>(f.arity)].push_back(f);

  ClosureCheck check;
  for (int n = 1; n <= max_arity && check.closed; ++n) {
    for (const Operation& f : by_arity[static_cast<std::size_t>(n)]) {
      if (!check.closed) break;
      std::vector<const Operation*> tuple;
      for_each_inner_tuple(by_arity, n, max_arity, tuple,
                           [&](const std::vector<const Operation*>& gs) {
                             if (!check.closed) return;
                             std::vector<Operation> inner;
                             inner.reserve(gs.size());
                             for (const Operation* g : gs)
                               inner.push_back(*g);
                             Operation r = superpose(f, inner);
                             if (!fs.contains(r)) {
                               check.closed = false;
                               check.gap = SuperpositionGap{
                                   "superposition escapes", f,
                                   std::move(inner), std::move(r)};
                             }
                           });
    }
  }
  return check;
}

}  // namespace pmc
