#include "qw/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qw {

namespace {

constexpr int kCanonicalOrderCap = 8;
constexpr int kQuandleOrderCap = 6;
constexpr int kExtensionOrderCap = 4;

std::vector<int> relabel_entries(const OpTable& t, const std::vector<int>& sigma) {
  int n = t.order();
  std::vector<int> out(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<size_t>(sigma[a]) * n + sigma[b]] = sigma[t.at(a, b)];
  return out;
}

std::vector<const OpTable*> roles_in_order(const StructureBundle& b) {
  std::vector<const OpTable*> roles;
  for (const auto* r : {&b.star, &b.slash, &b.dot, &b.circ, &b.bullet})
    if (r->has_value()) roles.push_back(&**r);
  return roles;
}

// Lexicographically least relabeling of a single table.
std::vector<int> canonical_table_entries(const OpTable& t) {
  int n = t.order();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best = relabel_entries(t, sigma);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    std::vector<int> cand = relabel_entries(t, sigma);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

// Automorphisms of (star): permutations fixing the table under relabeling.
std::vector<std::vector<int>> table_automorphisms(const OpTable& star) {
  int n = star.order();
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> autos;
  do {
    if (relabel_entries(star, sigma) == star.entries()) autos.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return autos;
}

struct NotQuandleInput : Error {
  NotQuandleInput() : Error("star/slash is not a quandle") {}
};

}  // namespace

StructureBundle relabel(const StructureBundle& b, const Perm& sigma) {
  auto map = [&](const std::optional<OpTable>& t) -> std::optional<OpTable> {
    if (!t) return std::nullopt;
    return OpTable(t->order(), relabel_entries(*t, sigma.images()));
  };
  return StructureBundle{b.order, map(b.star), map(b.slash),
                         map(b.dot), map(b.circ), map(b.bullet)};
}

StructureBundle canonical_form(const StructureBundle& b) {
  int n = b.order;
  if (n > kCanonicalOrderCap) throw OrderTooLarge(n, kCanonicalOrderCap);
  auto roles = roles_in_order(b);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);

  std::vector<int> best_sigma = sigma;
  std::vector<int> best_flat;
  auto flatten = [&](const std::vector<int>& s) {
    std::vector<int> flat;
    flat.reserve(roles.size() * n * n);
    for (const OpTable* t : roles) {
      auto e = relabel_entries(*t, s);
      flat.insert(flat.end(), e.begin(), e.end());
    }
    return flat;
  };
  best_flat = flatten(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    std::vector<int> cand = flatten(sigma);
    if (cand < best_flat) {
      best_flat = std::move(cand);
      best_sigma = sigma;
    }
  }
  return relabel(b, Perm(best_sigma));
}

bool are_isomorphic(const StructureBundle& a, const StructureBundle& b) {
  if (a.order != b.order) return false;
  auto ra = roles_in_order(a), rb = roles_in_order(b);
  if (ra.size() != rb.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

Catalog enumerate_quandles(int n, const std::vector<int>* column_order) {
  if (n > kQuandleOrderCap) throw OrderTooLarge(n, kQuandleOrderCap);
  if (n < 1) throw Error("order must be positive");

  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  if (column_order) seq = *column_order;

  // Candidate columns: permutations fixing their own index (idempotence).
  std::vector<std::vector<std::vector<int>>> candidates(n);
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      for (int y = 0; y < n; ++y)
        if (p[y] == y) candidates[y].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<std::vector<int>> col(n);  // col[y] = images of R_y
  std::vector<bool> assigned(n, false);
  std::set<std::vector<int>> canon_stars;

  auto conj = [n](const std::vector<int>& z, const std::vector<int>& y) {
    // z o y o z^-1
    std::vector<int> zinv(n), out(n);
    for (int i = 0; i < n; ++i) zinv[z[i]] = i;
    for (int i = 0; i < n; ++i) out[i] = z[y[zinv[i]]];
    return out;
  };

  // Rack closure: assigning columns y and z forces col[z(y)] = z o y o z^-1.
  // Returns assigned-column log for undo, or nullopt on contradiction.
  auto propagate = [&](std::vector<int> work) -> std::optional<std::vector<int>> {
    std::vector<int> log;
    auto fail = [&]() {
      for (int c : log) assigned[c] = false;
      return std::nullopt;
    };
    while (!work.empty()) {
      int a = work.back();
      work.pop_back();
      for (int b = 0; b < n; ++b) {
        if (!assigned[b]) continue;
        for (auto [y, z] : {std::pair{a, b}, std::pair{b, a}}) {
          int w = col[z][y];
          std::vector<int> forced = conj(col[z], col[y]);
          if (assigned[w]) {
            if (col[w] != forced) return fail();
          } else {
            col[w] = std::move(forced);
            assigned[w] = true;
            log.push_back(w);
            work.push_back(w);
          }
        }
      }
    }
    return log;
  };

  auto record = [&]() {
    OpTable star = OpTable::build(n, [&](int x, int y) { return col[y][x]; });
    canon_stars.insert(canonical_table_entries(star));
  };

  std::function<void()> descend = [&]() {
    int next = -1;
    for (int c : seq)
      if (!assigned[c]) {
        next = c;
        break;
      }
    if (next < 0) {
      record();
      return;
    }
    for (const auto& cand : candidates[next]) {
      col[next] = cand;
      assigned[next] = true;
      if (auto log = propagate({next})) {
        descend();
        for (int c : *log) assigned[c] = false;
      }
      assigned[next] = false;
    }
  };
  descend();

  Catalog cat{CatalogKind::quandle, n, {}};
  for (const auto& entries : canon_stars) {
    OpTable star(n, entries);
    OpTable slash = derive_right_inverse(star);
    cat.entries.push_back(StructureBundle{n, std::move(star), std::move(slash),
                                          std::nullopt, std::nullopt, std::nullopt});
  }
  return cat;
}

void for_each_osq_extension(const OpTable& star, const OpTable& slash,
                            const std::function<bool(const OpTable&)>& visit) {
  if (!check_quandle(star, &slash)) throw NotQuandleInput();
  int n = star.order();
  PermGroup group = rmlt_group(star);

  // Orbits of Q x Q under the diagonal action, with a transversal element
  // per pair. OSQ identity 1 forces dot to be equivariant, so one value per
  // orbit determines the whole table.
  struct Orbit {
    int rep_x, rep_y;
    std::vector<std::tuple<int, int, Perm>> members;  // (x, y, g) with (x,y) = g.rep
    std::vector<int> values;                          // stabilizer-fixed candidates
  };
  std::vector<Orbit> orbits;
  std::vector<bool> seen(static_cast<size_t>(n) * n, false);
  std::vector<Perm> gens;
  for (int z = 0; z < n; ++z) gens.push_back(right_translation(star, z));

  for (int rx = 0; rx < n; ++rx)
    for (int ry = 0; ry < n; ++ry) {
      if (seen[static_cast<size_t>(rx) * n + ry]) continue;
      Orbit orb{rx, ry, {}, {}};
      std::vector<std::tuple<int, int, Perm>> frontier;
      auto add = [&](int x, int y, Perm g) {
        if (seen[static_cast<size_t>(x) * n + y]) return;
        seen[static_cast<size_t>(x) * n + y] = true;
        orb.members.emplace_back(x, y, g);
        frontier.emplace_back(x, y, std::move(g));
      };
      add(rx, ry, Perm::identity(n));
      while (!frontier.empty()) {
        auto [x, y, g] = frontier.back();
        frontier.pop_back();
        for (const Perm& rho : gens) add(rho.apply(x), rho.apply(y), rho.compose(g));
      }
      for (int v = 0; v < n; ++v) {
        bool fixed = true;
        for (const Perm& g : group.elements())
          if (g.apply(rx) == rx && g.apply(ry) == ry && g.apply(v) != v) {
            fixed = false;
            break;
          }
        if (fixed) orb.values.push_back(v);
      }
      orbits.push_back(std::move(orb));
    }

  std::vector<int> dot(static_cast<size_t>(n) * n, 0);
  auto s = [&](int a, int b) { return star.at(a, b); };
  auto d = [&](int a, int b) { return dot[static_cast<size_t>(a) * n + b]; };
  auto identity2_holds = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (s(s(z, y), x) != s(s(z, d(x, y)), d(s(y, x), x))) return false;
    return true;
  };

  std::function<bool(size_t)> descend = [&](size_t k) -> bool {
    if (k == orbits.size()) {
      if (!identity2_holds()) return true;
      return visit(OpTable(n, dot));
    }
    for (int v : orbits[k].values) {
      for (const auto& [x, y, g] : orbits[k].members)
        dot[static_cast<size_t>(x) * n + y] = g.apply(v);
      if (!descend(k + 1)) return false;
    }
    return true;
  };
  descend(0);
}

ExtensionCatalog enumerate_osq_extensions(const OpTable& star, const OpTable& slash) {
  if (star.order() > kExtensionOrderCap) throw OrderTooLarge(star.order(), kExtensionOrderCap);
  ExtensionCatalog out{star, slash, {}, 0, 0};
  for_each_osq_extension(star, slash, [&](const OpTable& dot) {
    out.dots.push_back(dot);
    return true;
  });
  out.raw_count = out.dots.size();

  auto autos = table_automorphisms(star);
  std::set<std::vector<int>> reduced;
  for (const OpTable& dot : out.dots) {
    std::vector<int> best = dot.entries();
    for (const auto& sigma : autos) {
      auto cand = relabel_entries(dot, sigma);
      if (cand < best) best = std::move(cand);
    }
    reduced.insert(std::move(best));
  }
  out.count_up_to_star_iso = reduced.size();
  return out;
}

std::optional<StructureBundle> search_eq_bondles_counterexample(int max_order) {
  if (max_order > kExtensionOrderCap) throw OrderTooLarge(max_order, kExtensionOrderCap);
  for (int n = 1; n <= max_order; ++n) {
    Catalog cat = enumerate_quandles(n);
    for (const StructureBundle& q : cat.entries) {
      // Over a projection star the compatibility identity reduces to
      // y bullet x = y bullet x, so no extension can fail it.
      if (classify(*q.star).projection) continue;
      std::optional<StructureBundle> found;
      for_each_osq_extension(*q.star, *q.slash, [&](const OpTable& tbl) {
        if (!check_eq_bondles(tbl, *q.star)) {
          found = StructureBundle{n, q.star, q.slash, tbl, std::nullopt, tbl};
          return false;
        }
        return true;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace qw
