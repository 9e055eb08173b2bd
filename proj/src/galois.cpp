#include "pmc/galois.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <thread>

namespace pmc {

Matrix apply_to_window(const Operation& f, const Matrix& m, int start) {
  require(f.universe == m.universe, "apply_to_window: universe mismatch");
  require(start >= 0 && start + f.arity <= m.cols,
          "apply_to_window: window out of range");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(m.rows * (m.cols - f.arity + 1)));
  std::vector<int> args(static_cast<std::size_t>(f.arity));
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < start; ++c) entries.push_back(m.at(r, c));
    for (int i = 0; i < f.arity; ++i)
      args[static_cast<std::size_t>(i)] = m.at(r, start + i);
    entries.push_back(f.eval(args));
    for (int c = start + f.arity; c < m.cols; ++c) entries.push_back(m.at(r, c));
  }
  return Matrix(m.universe, m.rows, m.cols - f.arity + 1, std::move(entries));
}

std::optional<PreservationWitness> preservation_violation(
    const Operation& f, const MatrixCollection& g) {
  require(f.universe == g.universe, "preserves: universe mismatch");
  for (const Matrix& m : g.matrices) {
    if (m.cols < f.arity) continue;
    for (int start = 0; start + f.arity <= m.cols; ++start) {
      if (!g.contains(apply_to_window(f, m, start)))
        return PreservationWitness{m, start};
    }
  }
  return std::nullopt;
}

bool preserves(const Operation& f, const MatrixCollection& g) {
  return !preservation_violation(f, g).has_value();
}

namespace {

Operation table_from_index(Universe u, int arity, std::uint64_t index,
                           std::size_t len) {
  std::vector<int> table(len);
  for (std::size_t i = len; i-- > 0;) {
    table[i] = static_cast<int>(index % static_cast<std::uint64_t>(u.size));
    index /= static_cast<std::uint64_t>(u.size);
  }
  return Operation(u, arity, std::move(table));
}

bool preserves_all(const Operation& f,
                   const std::vector<MatrixCollection>& collections) {
  for (const MatrixCollection& g : collections)
    if (!preserves(f, g)) return false;
  return true;
}

}  // namespace

OperationSet pol(Universe u, const std::vector<MatrixCollection>& collections,
                 int max_arity, const Limits& limits, int jobs) {
  require(max_arity >= 1, "pol: max_arity must be >= 1");
  for (const MatrixCollection& g : collections)
    require(g.universe == u, "pol: collection universe mismatch");

  OperationSet out(u);
  for (int arity = 1; arity <= max_arity; ++arity) {
    const std::uint64_t len = table_length(u, arity, limits);
    const std::uint64_t count = saturating_pow(
        static_cast<std::uint64_t>(u.size), len, limits.max_tables);
    if (count > limits.max_tables)
      throw CapExceeded("pol: enumerating arity-" + std::to_string(arity) +
                        " tables exceeds the table cap");

    const int workers =
        std::max(1, std::min<int>(jobs, static_cast<int>(
                                            std::min<std::uint64_t>(count, 64))));
    std::vector<std::vector<Operation>> kept(
        static_cast<std::size_t>(workers));
    auto scan = [&](int w) {
      const std::uint64_t lo = count * static_cast<std::uint64_t>(w) /
                               static_cast<std::uint64_t>(workers);
      const std::uint64_t hi = count * static_cast<std::uint64_t>(w + 1) /
                               static_cast<std::uint64_t>(workers);
      for (std::uint64_t i = lo; i < hi; ++i) {
        Operation f = table_from_index(u, arity, i, static_cast<std::size_t>(len));
        if (preserves_all(f, collections))
          kept[static_cast<std::size_t>(w)].push_back(std::move(f));
      }
    };
    if (workers == 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
      for (std::thread& t : pool) t.join();
    }
    for (auto& chunk : kept)
      for (Operation& f : chunk) out.insert(std::move(f));
  }
  return out;
}

MatrixCollection inv_closure(const OperationSet& fs,
                             const MatrixCollection& seed) {
  require(fs.universe == seed.universe, "inv_closure: universe mismatch");
  MatrixCollection out = seed;
  std::deque<Matrix> queue(seed.matrices.begin(), seed.matrices.end());
  while (!queue.empty()) {
    const Matrix m = std::move(queue.front());
    queue.pop_front();
    for (const Operation& f : fs.ops) {
      if (f.arity > m.cols) continue;  // wider than the matrix: cannot fire
      for (int start = 0; start + f.arity <= m.cols; ++start) {
        Matrix t = apply_to_window(f, m, start);
        if (out.matrices.insert(t).second) queue.push_back(std::move(t));
      }
    }
  }
  return out;
}

SeparationResult separating_collection(const OperationSet& fs,
                                       const Operation& g,
                                       const Limits& limits) {
  require(fs.universe == g.universe, "separating_collection: universe mismatch");
  const Universe u = g.universe;
  const int m = g.arity;

  // M_*: one row per m-tuple of A^m, lexicographic. On a finite universe
  // this is a valid separating set because two m-ary operations agreeing on
  // every row agree everywhere.
  const std::uint64_t row_count64 = saturating_pow(
      static_cast<std::uint64_t>(u.size), static_cast<std::uint64_t>(m),
      limits.max_collection_size);
  if (row_count64 > limits.max_collection_size)
    throw CapExceeded("separating_collection: A^m has too many rows");
  const int row_count = static_cast<int>(row_count64);
  std::vector<int> base_entries;
  base_entries.reserve(static_cast<std::size_t>(row_count * m));
  for_each_tuple(u.size, m, [&](std::span<const int> tuple) {
    base_entries.insert(base_entries.end(), tuple.begin(), tuple.end());
  });
  Matrix m_star(u, row_count, m, std::move(base_entries));

  const OperationSet closure = preclone_closure(fs, m, limits);
  std::vector<std::vector<Operation>> by_arity(static_cast<std::size_t>(m) + 1);
  for (const Operation& h : closure.ops)
    by_arity[static_cast<std::size_t>(h.arity)].push_back(h);

  MatrixCollection gamma(u, row_count, m);
  std::vector<std::vector<int>> columns;  // one column per block so far

  auto emit = [&]() {
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(row_count) * columns.size());
    for (int r = 0; r < row_count; ++r)
      for (const auto& col : columns)
        entries.push_back(col[static_cast<std::size_t>(r)]);
    gamma.insert(Matrix(u, row_count, static_cast<int>(columns.size()),
                        std::move(entries)));
  };

  // Ordered partitions of M_*'s columns into consecutive blocks; each block
  // of width c is mapped to the single column h M_i by some h of arity c.
  std::function<void(int)> build = [&](int offset) {
    if (offset == m) {
      emit();
      return;
    }
    std::vector<int> args;
    for (int width = 1; offset + width <= m; ++width) {
      for (const Operation& h : by_arity[static_cast<std::size_t>(width)]) {
        std::vector<int> col(static_cast<std::size_t>(row_count));
        args.assign(static_cast<std::size_t>(width), 0);
        for (int r = 0; r < row_count; ++r) {
          for (int i = 0; i < width; ++i)
            args[static_cast<std::size_t>(i)] = m_star.at(r, offset + i);
          col[static_cast<std::size_t>(r)] = h.eval(args);
        }
        columns.push_back(std::move(col));
        build(offset + width);
        columns.pop_back();
      }
    }
  };
  build(0);

  Matrix target = apply_to_window(g, m_star, 0);
  const bool separable = !gamma.contains(target);
  return SeparationResult{separable, std::move(gamma), std::move(m_star),
                          std::move(target)};
}

CharacterizeReport characterize_check(const OperationSet& fs,
                                      const std::vector<MatrixCollection>& ms,
                                      int max_arity, const Limits& limits,
                                      int jobs) {
  const OperationSet p = pol(fs.universe, ms, max_arity, limits, jobs);
  const OperationSet c = preclone_closure(fs, max_arity, limits);
  CharacterizeReport report;
  std::set_difference(p.ops.begin(), p.ops.end(), c.ops.begin(), c.ops.end(),
                      std::back_inserter(report.only_in_pol));
  std::set_difference(c.ops.begin(), c.ops.end(), p.ops.begin(), p.ops.end(),
                      std::back_inserter(report.only_in_closure));
  report.equal = report.only_in_pol.empty() && report.only_in_closure.empty();
  return report;
}

namespace {

// Indexed matrix universe Ω_m^(B) with one-step window-replacement edges.
struct ReplacementGraph {
  std::vector<Matrix> matrices;
  std::map<Matrix, int> index;
  std::vector<std::vector<int>> targets;  // per node, deduplicated
  std::vector<std::uint64_t> reach;       // reflexive-transitive closure masks

  ReplacementGraph(const OperationSet& fs, int arity, int max_breadth,
                   const Limits& limits) {
    for (int q = 0; q <= max_breadth; ++q)
      for (Matrix& m : enumerate_matrices(fs.universe, arity, q, limits))
        matrices.push_back(std::move(m));
    if (matrices.size() > 63)
      throw CapExceeded(
          "matrix universe of arity " + std::to_string(arity) + ", breadth " +
          std::to_string(max_breadth) + " has " +
          std::to_string(matrices.size()) + " members; 63 is the mask limit");
    for (std::size_t i = 0; i < matrices.size(); ++i)
      index[matrices[i]] = static_cast<int>(i);

    targets.resize(matrices.size());
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      const Matrix& m = matrices[i];
      for (const Operation& f : fs.ops) {
        if (f.arity > m.cols) continue;
        for (int start = 0; start + f.arity <= m.cols; ++start) {
          const int t = index.at(apply_to_window(f, m, start));
          auto& ts = targets[i];
          if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
        }
      }
    }

    reach.assign(matrices.size(), 0);
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      std::uint64_t mask = std::uint64_t{1} << i;
      std::vector<int> stack{static_cast<int>(i)};
      while (!stack.empty()) {
        const int node = stack.back();
        stack.pop_back();
        for (int t : targets[static_cast<std::size_t>(node)]) {
          const std::uint64_t bit = std::uint64_t{1} << t;
          if (!(mask & bit)) {
            mask |= bit;
            stack.push_back(t);
          }
        }
      }
      reach[i] = mask;
    }
  }
};

}  // namespace

std::vector<MatrixCollection> preserved_family(const OperationSet& fs,
                                               int arity, int max_breadth,
                                               const Limits& limits) {
  require(arity >= 1 && max_breadth >= 0, "preserved_family: bad bounds");
  const ReplacementGraph graph(fs, arity, max_breadth, limits);
  const std::size_t bits = graph.matrices.size();

  // Required-successor masks: a subset is preserved iff it is closed under
  // one-step replacement for each of its members.
  std::vector<std::uint64_t> needed(bits, 0);
  for (std::size_t i = 0; i < bits; ++i)
    for (int t : graph.targets[i]) needed[i] |= std::uint64_t{1} << t;

  std::vector<MatrixCollection> out;
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool closed = true;
    for (std::uint64_t rest = mask; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      if (needed[static_cast<std::size_t>(i)] & ~mask) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    if (out.size() >= limits.max_family)
      throw CapExceeded("preserved_family exceeds the family cap");
    MatrixCollection g(fs.universe, arity, max_breadth);
    for (std::uint64_t rest = mask; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      g.matrices.insert(graph.matrices[static_cast<std::size_t>(i)]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

OperationSet pol_of_preserved(const OperationSet& fs, int max_rows,
                              int max_breadth, int max_arity,
                              const Limits& limits) {
  require(max_rows >= 1 && max_breadth >= 0 && max_arity >= 1,
          "pol_of_preserved: bad bounds");
  std::vector<ReplacementGraph> graphs;
  graphs.reserve(static_cast<std::size_t>(max_rows));
  for (int m = 1; m <= max_rows; ++m)
    graphs.emplace_back(fs, m, max_breadth, limits);

  OperationSet out(fs.universe);
  for (int arity = 1; arity <= max_arity; ++arity) {
    for (Operation& f : enumerate_operations(fs.universe, arity, limits)) {
      bool ok = true;
      for (const ReplacementGraph& graph : graphs) {
        for (std::size_t i = 0; ok && i < graph.matrices.size(); ++i) {
          const Matrix& m = graph.matrices[i];
          if (m.cols < arity) continue;
          for (int start = 0; ok && start + arity <= m.cols; ++start) {
            const int t = graph.index.at(apply_to_window(f, m, start));
            if (!(graph.reach[i] & (std::uint64_t{1} << t))) ok = false;
          }
        }
        if (!ok) break;
      }
      if (ok) out.insert(std::move(f));
    }
  }
  return out;
}

}  // namespace pmc
