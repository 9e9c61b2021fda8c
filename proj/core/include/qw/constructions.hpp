#pragma once

#include <vector>

#include "qw/axioms.hpp"
#include "qw/table.hpp"

namespace qw {

struct DiagonalNonZero : Error {
  int index;
  explicit DiagonalNonZero(int i)
      : Error("mesh constant c[" + std::to_string(i) + "][" + std::to_string(i) +
              "] is nonzero"),
        index(i) {}
};

struct GenerationFailure : Error {
  int component;
  explicit GenerationFailure(int j)
      : Error("mesh constants do not generate component " + std::to_string(j)), component(j) {}
};

struct BadElement : Error {
  int row, col;
  BadElement(int i, int j)
      : Error("c[" + std::to_string(i) + "][" + std::to_string(j) +
              "] is not an element of component " + std::to_string(j)),
        row(i), col(j) {}
};

/// Data of an affine mesh: a list of finite abelian groups (each a direct
/// sum of cyclic groups given by their moduli) and a matrix of translation
/// constants, constants[i][j] an element of component j.
struct MeshSpec {
  std::vector<std::vector<int>> components;
  std::vector<std::vector<std::vector<int>>> constants;
  bool relaxed = false;  // skip the generation condition
};

/// Quandle on the disjoint union of the components: x * y = x + c[i][j]
/// for x in block j, y in block i. Blocks are laid out in spec order,
/// elements within a block in lexicographic tuple order.
StructureBundle affine_mesh(const MeshSpec& spec);

StructureBundle projection_quandle(int n);

/// star(x, y) = (2y - x) mod n; involutory for every n.
StructureBundle dihedral_quandle(int n);

/// (Q, star^n, star^m, slash^m); requires a 2-reductive quandle.
StructureBundle power_osq(const OpTable& star, const OpTable& slash, int n, int m);

/// (Q, star^n, star^m, star, slash); requires a 2-reductive quandle.
StructureBundle power_bondle(const OpTable& star, const OpTable& slash, int n, int m);

/// circ = dot; requires (dot, star, slash) to be an oriented singquandle.
StructureBundle trivial_stuquandle(const OpTable& dot, const OpTable& star,
                                   const OpTable& slash);

}  // namespace qw
