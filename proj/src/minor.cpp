#include "pmc/minor.hpp"

#include <algorithm>
#include <set>

namespace pmc {

MinorFormationScheme::MinorFormationScheme(
    int m, std::vector<std::string> indets,
    std::vector<std::vector<MinorImage>> hs)
    : target(m), indeterminates(std::move(indets)), maps(std::move(hs)) {
  require(target >= 1, "scheme: target arity must be >= 1");
  require(!maps.empty(), "scheme: the source family must be nonempty");
  std::set<std::string> names(indeterminates.begin(), indeterminates.end());
  require(names.size() == indeterminates.size(),
          "scheme: duplicate indeterminate name");
  for (const auto& h : maps) {
    require(!h.empty(), "scheme: source arities must be >= 1");
    for (const MinorImage& image : h) {
      if (const int* row = std::get_if<int>(&image)) {
        require(*row >= 0 && *row < target,
                "scheme: map image row " + std::to_string(*row) +
                    " out of target range");
      } else {
        const std::string& name = std::get<std::string>(image);
        require(names.count(name) > 0,
                "scheme: map image \"" + name + "\" is not an indeterminate");
      }
    }
  }
}

namespace {

// Resolved image: row index into the candidate, or index into V.
struct ResolvedImage {
  bool is_row;
  int index;
};

std::vector<std::vector<ResolvedImage>> resolve(
    const MinorFormationScheme& scheme) {
  std::map<std::string, int> v_index;
  for (std::size_t i = 0; i < scheme.indeterminates.size(); ++i)
    v_index[scheme.indeterminates[i]] = static_cast<int>(i);
  std::vector<std::vector<ResolvedImage>> out(scheme.maps.size());
  for (std::size_t j = 0; j < scheme.maps.size(); ++j) {
    out[j].reserve(scheme.maps[j].size());
    for (const MinorImage& image : scheme.maps[j]) {
      if (const int* row = std::get_if<int>(&image))
        out[j].push_back({true, *row});
      else
        out[j].push_back({false, v_index.at(std::get<std::string>(image))});
    }
  }
  return out;
}

}  // namespace

MatrixCollection conjunctive_minor(const MinorFormationScheme& scheme,
                                   const std::vector<MatrixCollection>& sources,
                                   int max_breadth, const Limits& limits) {
  require(sources.size() == scheme.family_size(),
          "conjunctive minor: " + std::to_string(scheme.family_size()) +
              " scheme maps but " + std::to_string(sources.size()) +
              " source collections");
  require(!sources.empty(), "conjunctive minor: empty source family");
  const Universe u = sources.front().universe;
  for (std::size_t j = 0; j < sources.size(); ++j) {
    require(sources[j].universe == u, "conjunctive minor: universe mismatch");
    require(sources[j].arity == scheme.source_arity(j),
            "conjunctive minor: source " + std::to_string(j) + " has arity " +
                std::to_string(sources[j].arity) + ", scheme expects " +
                std::to_string(scheme.source_arity(j)));
  }
  require(max_breadth >= 0, "conjunctive minor: max_breadth must be >= 0");

  const auto resolved = resolve(scheme);
  const int v_count = static_cast<int>(scheme.indeterminates.size());
  MatrixCollection out(u, scheme.target, max_breadth);

  for (int q = 0; q <= max_breadth; ++q) {
    const std::uint64_t assignments = saturating_pow(
        static_cast<std::uint64_t>(u.size),
        static_cast<std::uint64_t>(v_count) * static_cast<std::uint64_t>(q),
        limits.max_assignments);
    if (assignments > limits.max_assignments)
      throw CapExceeded(
          "conjunctive minor: |A|^(|V|*cols) = k^" +
          std::to_string(v_count * q) + " exceeds the assignment cap");

    for (const Matrix& cand : enumerate_matrices(u, scheme.target, q, limits)) {
      bool member = false;
      // sigma is read as sigma[column * v_count + v].
      for_each_tuple(u.size, v_count * q, [&](std::span<const int> sigma) {
        if (member) return;
        for (std::size_t j = 0; j < sources.size(); ++j) {
          const auto& h = resolved[j];
          std::vector<int> entries;
          entries.reserve(h.size() * static_cast<std::size_t>(q));
          for (const ResolvedImage& image : h) {
            for (int c = 0; c < q; ++c) {
              entries.push_back(image.is_row
                                    ? cand.at(image.index, c)
                                    : sigma[static_cast<std::size_t>(
                                          c * v_count + image.index)]);
            }
          }
          Matrix transformed(u, static_cast<int>(h.size()), q,
                             std::move(entries));
          if (!sources[j].contains(transformed)) return;
        }
        member = true;
      });
      if (member) out.matrices.insert(cand);
    }
  }
  return out;
}

MatrixCollection permute_rows(const std::vector<int>& perm,
                              const MatrixCollection& g, const Limits& limits) {
  const int m = g.arity;
  require(static_cast<int>(perm.size()) == m,
          "permute_rows: permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int p : perm) {
    require(p >= 0 && p < m, "permute_rows: index out of range");
    require(!seen[static_cast<std::size_t>(p)],
            "permute_rows: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<MinorImage> h;
  for (int p : perm) h.emplace_back(p);
  MinorFormationScheme scheme(m, {}, {h});
  return conjunctive_minor(scheme, {g}, g.breadth_bound, limits);
}

MatrixCollection identify_rows(const std::vector<int>& row_map,
                               int target_arity, const MatrixCollection& g,
                               const Limits& limits) {
  require(static_cast<int>(row_map.size()) == g.arity,
          "identify_rows: map size mismatch");
  require(target_arity >= 1, "identify_rows: target arity must be >= 1");
  std::vector<bool> hit(static_cast<std::size_t>(target_arity), false);
  for (int r : row_map) {
    require(r >= 0 && r < target_arity, "identify_rows: image out of range");
    hit[static_cast<std::size_t>(r)] = true;
  }
  require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
          "identify_rows: map must be surjective onto the target rows");
  std::vector<MinorImage> h;
  for (int r : row_map) h.emplace_back(r);
  MinorFormationScheme scheme(target_arity, {}, {h});
  return conjunctive_minor(scheme, {g}, g.breadth_bound, limits);
}

MatrixCollection add_dummy_rows(const std::vector<int>& placements,
                                int target_arity, const MatrixCollection& g,
                                const Limits& limits) {
  require(static_cast<int>(placements.size()) == g.arity,
          "add_dummy_rows: placement size mismatch");
  require(target_arity >= g.arity,
          "add_dummy_rows: target arity must be >= source arity");
  std::vector<bool> used(static_cast<std::size_t>(target_arity), false);
  for (int r : placements) {
    require(r >= 0 && r < target_arity,
            "add_dummy_rows: placement out of range");
    require(!used[static_cast<std::size_t>(r)],
            "add_dummy_rows: placements must be injective");
    used[static_cast<std::size_t>(r)] = true;
  }
  std::vector<MinorImage> h;
  for (int r : placements) h.emplace_back(r);
  MinorFormationScheme scheme(target_arity, {}, {h});
  return conjunctive_minor(scheme, {g}, g.breadth_bound, limits);
}

MatrixCollection project_rows(const std::vector<int>& kept_rows,
                              const MatrixCollection& g, const Limits& limits) {
  const int m = g.arity;
  require(!kept_rows.empty(), "project_rows: must keep at least one row");
  std::vector<int> target_of(static_cast<std::size_t>(m), -1);
  for (std::size_t t = 0; t < kept_rows.size(); ++t) {
    const int r = kept_rows[t];
    require(r >= 0 && r < m, "project_rows: kept row out of range");
    require(target_of[static_cast<std::size_t>(r)] == -1,
            "project_rows: kept rows must be distinct");
    target_of[static_cast<std::size_t>(r)] = static_cast<int>(t);
  }
  std::vector<std::string> indets;
  std::vector<MinorImage> h;
  for (int r = 0; r < m; ++r) {
    if (target_of[static_cast<std::size_t>(r)] >= 0) {
      h.emplace_back(target_of[static_cast<std::size_t>(r)]);
    } else {
      std::string name = "v" + std::to_string(r);
      indets.push_back(name);
      h.emplace_back(name);
    }
  }
  MinorFormationScheme scheme(static_cast<int>(kept_rows.size()),
                              std::move(indets), {h});
  return conjunctive_minor(scheme, {g}, g.breadth_bound, limits);
}

}  // namespace pmc
