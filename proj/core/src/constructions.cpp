#include "qw/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qw {

namespace {

int component_size(const std::vector<int>& moduli) {
  int s = 1;
  for (int m : moduli) s *= m;
  return s;
}

// Lexicographic rank of a residue tuple within its component.
int tuple_rank(const std::vector<int>& moduli, const std::vector<int>& t) {
  int r = 0;
  for (size_t k = 0; k < moduli.size(); ++k) r = r * moduli[k] + t[k];
  return r;
}

std::vector<int> add_mod(const std::vector<int>& moduli, const std::vector<int>& a,
                         const std::vector<int>& b) {
  std::vector<int> out(moduli.size());
  for (size_t k = 0; k < moduli.size(); ++k) out[k] = (a[k] + b[k]) % moduli[k];
  return out;
}

bool valid_element(const std::vector<int>& moduli, const std::vector<int>& t) {
  if (t.size() != moduli.size()) return false;
  for (size_t k = 0; k < moduli.size(); ++k)
    if (t[k] < 0 || t[k] >= moduli[k]) return false;
  return true;
}

// Closure of the given elements under addition.
std::set<std::vector<int>> generated_subgroup(const std::vector<int>& moduli,
                                              const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> closure;
  closure.insert(std::vector<int>(moduli.size(), 0));
  std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        auto v = add_mod(moduli, f, g);
        if (closure.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return closure;
}

void require_two_reductive(const OpTable& star, const OpTable& slash) {
  ClassifyFlags f = classify(star);
  if (!f.quandle || !f.two_reductive || !check_quandle(star, &slash))
    throw NotTwoReductive();
}

}  // namespace

StructureBundle affine_mesh(const MeshSpec& spec) {
  int k = static_cast<int>(spec.components.size());
  if (k == 0) throw Error("mesh needs at least one component");
  if (static_cast<int>(spec.constants.size()) != k) throw Error("constant matrix is not k x k");
  for (const auto& row : spec.constants)
    if (static_cast<int>(row.size()) != k) throw Error("constant matrix is not k x k");
  for (const auto& moduli : spec.components)
    for (int m : moduli)
      if (m < 1) throw Error("cyclic factor modulus must be positive");

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!valid_element(spec.components[j], spec.constants[i][j])) throw BadElement(i, j);
  for (int i = 0; i < k; ++i)
    if (std::any_of(spec.constants[i][i].begin(), spec.constants[i][i].end(),
                    [](int v) { return v != 0; }))
      throw DiagonalNonZero(i);
  if (!spec.relaxed) {
    for (int j = 0; j < k; ++j) {
      std::vector<std::vector<int>> gens;
      for (int i = 0; i < k; ++i) gens.push_back(spec.constants[i][j]);
      if (static_cast<int>(generated_subgroup(spec.components[j], gens).size()) !=
          component_size(spec.components[j]))
        throw GenerationFailure(j);
    }
  }

  std::vector<int> offsets(k + 1, 0);
  for (int j = 0; j < k; ++j) offsets[j + 1] = offsets[j] + component_size(spec.components[j]);
  int n = offsets[k];

  // Tuples of every carrier element, block by block.
  std::vector<std::vector<int>> tuple(n);
  std::vector<int> block(n);
  for (int j = 0; j < k; ++j) {
    const auto& moduli = spec.components[j];
    std::vector<int> t(moduli.size(), 0);
    for (int p = 0; p < component_size(moduli); ++p) {
      int idx = offsets[j] + p;
      tuple[idx] = t;
      block[idx] = j;
      for (int d = static_cast<int>(moduli.size()) - 1; d >= 0; --d) {
        if (++t[d] < moduli[d]) break;
        t[d] = 0;
      }
    }
  }

  auto translate = [&](int x, int y, int sign) {
    int j = block[x], i = block[y];
    const auto& moduli = spec.components[j];
    std::vector<int> c = spec.constants[i][j];
    if (sign < 0)
      for (size_t d = 0; d < c.size(); ++d) c[d] = (moduli[d] - c[d]) % moduli[d];
    return offsets[j] + tuple_rank(moduli, add_mod(moduli, tuple[x], c));
  };

  OpTable star = OpTable::build(n, [&](int x, int y) { return translate(x, y, +1); });
  OpTable slash = OpTable::build(n, [&](int x, int y) { return translate(x, y, -1); });
  return StructureBundle{n, std::move(star), std::move(slash),
                         std::nullopt, std::nullopt, std::nullopt};
}

StructureBundle projection_quandle(int n) {
  if (n < 1) throw Error("order must be positive");
  OpTable star = OpTable::build(n, [](int x, int) { return x; });
  return StructureBundle{n, star, star, std::nullopt, std::nullopt, std::nullopt};
}

StructureBundle dihedral_quandle(int n) {
  if (n < 1) throw Error("order must be positive");
  OpTable star = OpTable::build(n, [n](int x, int y) { return ((2 * y - x) % n + n) % n; });
  return StructureBundle{n, star, star, std::nullopt, std::nullopt, std::nullopt};
}

StructureBundle power_osq(const OpTable& star, const OpTable& slash, int n, int m) {
  require_two_reductive(star, slash);
  return StructureBundle{star.order(), power_op(star, m), power_op(star, -m),
                         power_op(star, n), std::nullopt, std::nullopt};
}

StructureBundle power_bondle(const OpTable& star, const OpTable& slash, int n, int m) {
  require_two_reductive(star, slash);
  return StructureBundle{star.order(), star, slash, power_op(star, n),
                         std::nullopt, power_op(star, m)};
}

StructureBundle trivial_stuquandle(const OpTable& dot, const OpTable& star,
                                   const OpTable& slash) {
  StructureBundle osq{star.order(), star, slash, dot, std::nullopt, std::nullopt};
  if (!check_osq(osq, OsqMode::reduced)) throw NotOsq();
  osq.circ = dot;
  return osq;
}

}  // namespace qw
