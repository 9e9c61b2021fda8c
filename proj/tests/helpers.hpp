#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qw/axioms.hpp"
#include "qw/constructions.hpp"
#include "qw/table.hpp"

namespace qwtest {

// The order-3 tables from the bondle counterexample, shifted to 0-indexing.
inline qw::OpTable cx_star() { return qw::OpTable(3, {0, 2, 0, 1, 1, 1, 2, 0, 2}); }
inline qw::OpTable cx_bullet() { return qw::OpTable(3, {1, 0, 2, 1, 1, 1, 0, 2, 1}); }

inline qw::OpTable projection_table(int n) {
  return qw::OpTable::build(n, [](int x, int) { return x; });
}

inline qw::OpTable dihedral_table(int n) {
  return qw::OpTable::build(n, [n](int x, int y) { return ((2 * y - x) % n + n) % n; });
}

inline qw::StructureBundle quandle_bundle(const qw::OpTable& star) {
  return qw::StructureBundle{star.order(), star, qw::derive_right_inverse(star),
                             std::nullopt, std::nullopt, std::nullopt};
}

// Every n x n table, in lexicographic entry order.
template <typename Visit>
void for_each_table(int n, Visit visit) {
  std::vector<int> entries(static_cast<size_t>(n) * n, 0);
  while (true) {
    visit(qw::OpTable(n, entries));
    int i = static_cast<int>(entries.size()) - 1;
    while (i >= 0 && entries[i] == n - 1) entries[i--] = 0;
    if (i < 0) return;
    ++entries[i];
  }
}

inline qw::OpTable random_table(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, n - 1);
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int& e : entries) e = dist(rng);
  return qw::OpTable(n, std::move(entries));
}

// Independent oracle for small quandle counts: fill the table entry by
// entry in row-major order, rejecting prefixes that already break
// idempotence or column injectivity, and filter complete tables by the
// quandle identities. Counts distinct canonical star tables.
namespace detail {

inline bool oracle_prefix_ok(int n, const std::vector<int>& entries, int pos) {
  int x = pos / n, y = pos % n;
  int v = entries[pos];
  if (x == y && v != x) return false;
  for (int xx = 0; xx < x; ++xx)
    if (entries[xx * n + y] == v) return false;
  return true;
}

inline bool oracle_is_quandle(int n, const std::vector<int>& e) {
  auto s = [&](int a, int b) { return e[a * n + b]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s(s(x, y), z) != s(s(x, z), s(y, z))) return false;
  return true;
}

inline std::vector<int> oracle_canonical(int n, const std::vector<int>& e) {
  std::vector<int> sigma(n), best, cand(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  do {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        cand[static_cast<size_t>(sigma[a]) * n + sigma[b]] = sigma[e[a * n + b]];
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

inline void oracle_descend(int n, std::vector<int>& entries, int pos,
                           std::set<std::vector<int>>& canon) {
  if (pos == n * n) {
    if (oracle_is_quandle(n, entries)) canon.insert(oracle_canonical(n, entries));
    return;
  }
  for (int v = 0; v < n; ++v) {
    entries[pos] = v;
    if (oracle_prefix_ok(n, entries, pos)) oracle_descend(n, entries, pos + 1, canon);
  }
}

}  // namespace detail

inline size_t brute_force_quandle_count(int n) {
  std::vector<int> entries(static_cast<size_t>(n) * n, 0);
  std::set<std::vector<int>> canon;
  detail::oracle_descend(n, entries, 0, canon);
  return canon.size();
}

// Affine meshes over components from {Z1, Z2, Z3, Z4, Z2+Z2} with at most
// two components and every zero-diagonal constant matrix. Matrices passing
// the generation condition are taken as-is; component lists admitting none
// (any list with Z2+Z2, single components beyond Z1) contribute their
// relaxed meshes instead.
inline std::vector<qw::MeshSpec> mesh_battery() {
  using Group = std::vector<int>;
  const std::vector<Group> groups = {{1}, {2}, {3}, {4}, {2, 2}};

  auto elements_of = [](const Group& g) {
    std::vector<std::vector<int>> els;
    std::vector<int> t(g.size(), 0);
    while (true) {
      els.push_back(t);
      int i = static_cast<int>(g.size()) - 1;
      while (i >= 0 && t[i] == g[i] - 1) t[i--] = 0;
      if (i < 0) return els;
      ++t[i];
    }
  };

  std::vector<qw::MeshSpec> battery;
  auto add_variants = [&](const std::vector<Group>& comps) {
    int k = static_cast<int>(comps.size());
    std::vector<std::vector<std::vector<int>>> cell_choices;  // off-diagonal, row-major
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) {
          cells.emplace_back(i, j);
          cell_choices.push_back(elements_of(comps[j]));
        }
    std::vector<qw::MeshSpec> strict, relaxed;
    std::vector<size_t> pick(cells.size(), 0);
    while (true) {
      qw::MeshSpec spec;
      spec.components = comps;
      spec.constants.assign(k, std::vector<std::vector<int>>(k));
      for (int i = 0; i < k; ++i) spec.constants[i][i].assign(comps[i].size(), 0);
      for (size_t c = 0; c < cells.size(); ++c)
        spec.constants[cells[c].first][cells[c].second] = cell_choices[c][pick[c]];
      try {
        qw::affine_mesh(spec);
        strict.push_back(spec);
      } catch (const qw::GenerationFailure&) {
        spec.relaxed = true;
        relaxed.push_back(spec);
      }
      int i = static_cast<int>(pick.size()) - 1;
      while (i >= 0 && pick[i] + 1 == cell_choices[i].size()) pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
    if (!strict.empty())
      battery.insert(battery.end(), strict.begin(), strict.end());
    else
      battery.insert(battery.end(), relaxed.begin(), relaxed.end());
  };

  for (const auto& g : groups) add_variants({g});
  for (const auto& a : groups)
    for (const auto& b : groups) add_variants({a, b});
  return battery;
}

}  // namespace qwtest
