#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "qw/table.hpp"

using namespace qw;
using qwtest::dihedral_table;
using qwtest::cx_star;
using qwtest::projection_table;

TEST_CASE("right_translation reads columns") {
  CHECK(right_translation(cx_star(), 0) == Perm::identity(3));
  for (int y = 0; y < 3; ++y)
    CHECK(right_translation(projection_table(3), y) == Perm::identity(3));
  CHECK(right_translation(dihedral_table(3), 1).images() == std::vector<int>{2, 1, 0});
}

TEST_CASE("right_translation rejects non-bijective columns") {
  OpTable t(2, {0, 0, 1, 0});  // column 1 hits 0 twice
  CHECK_THROWS_AS(right_translation(t, 1), NotBijective);
  CHECK_THROWS_AS(derive_right_inverse(t), NotBijective);
  CHECK_THROWS_AS(power_op(t, 2), NotBijective);
}

TEST_CASE("derive_right_inverse on involutory tables is the identity map") {
  CHECK(derive_right_inverse(dihedral_table(3)) == dihedral_table(3));
  CHECK(derive_right_inverse(projection_table(4)) == projection_table(4));
  CHECK(derive_right_inverse(cx_star()) == cx_star());
}

TEST_CASE("double right inverse round-trips") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    // random table with bijective columns
    std::vector<int> entries(static_cast<size_t>(n) * n);
    for (int y = 0; y < n; ++y) {
      std::vector<int> col(n);
      for (int i = 0; i < n; ++i) col[i] = i;
      std::shuffle(col.begin(), col.end(), rng);
      for (int x = 0; x < n; ++x) entries[static_cast<size_t>(x) * n + y] = col[x];
    }
    OpTable t(n, entries);
    CHECK(derive_right_inverse(derive_right_inverse(t)) == t);
    CHECK(opposite(opposite(t)) == t);
    CHECK(power_op(t, 1) == t);
    CHECK(power_op(t, -1) == derive_right_inverse(t));
    CHECK(power_op(t, 0) == projection_table(n));
    // R_y exponent law
    for (int k = -3; k <= 3; ++k)
      for (int y = 0; y < n; ++y)
        CHECK(right_translation(power_op(t, k), y) == right_translation(t, y).power(k));
  }
}

TEST_CASE("opposite transposes") {
  CHECK(opposite(OpTable(2, {0, 0, 1, 1})) == OpTable(2, {0, 1, 0, 1}));
  CHECK(opposite(qwtest::cx_bullet()) == OpTable(3, {1, 1, 0, 0, 1, 2, 2, 1, 1}));
  CHECK(opposite(dihedral_table(3)) == dihedral_table(3));  // symmetric table
  CHECK(opposite(opposite(dihedral_table(5))) == dihedral_table(5));
}

TEST_CASE("power_op of dihedral squares to projection") {
  CHECK(power_op(dihedral_table(3), 2) == projection_table(3));
  CHECK(power_op(cx_star(), -1) == cx_star());
}

TEST_CASE("rmlt_group sizes") {
  CHECK(rmlt_group(dihedral_table(3)).size() == 6);
  CHECK(rmlt_group(projection_table(5)).size() == 1);
  CHECK(rmlt_group(cx_star()).size() == 2);
}

TEST_CASE("rmlt_group closure contains identity and is closed") {
  for (const OpTable& t : {dihedral_table(4), cx_star(), projection_table(6),
                           dihedral_table(6)}) {
    PermGroup g = rmlt_group(t);
    bool has_id = false;
    for (const Perm& p : g.elements()) has_id = has_id || p.is_identity();
    CHECK(has_id);
    for (const Perm& a : g.elements())
      for (const Perm& b : g.elements()) {
        Perm ab = a.compose(b);
        CHECK(std::binary_search(g.elements().begin(), g.elements().end(), ab));
      }
  }
}

TEST_CASE("is_abelian") {
  CHECK(is_abelian(rmlt_group(projection_table(3))));
  CHECK(is_abelian(rmlt_group(cx_star())));
  CHECK_FALSE(is_abelian(rmlt_group(dihedral_table(3))));
}

TEST_CASE("abelian RMlt is preserved by power operations") {
  for (const OpTable& t : {cx_star(), projection_table(4), dihedral_table(4)}) {
    if (!is_abelian(rmlt_group(t))) continue;
    for (int k = -3; k <= 3; ++k) CHECK(is_abelian(rmlt_group(power_op(t, k))));
  }
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(OpTable(2, {0, 1, 2, 0}), Error);  // entry out of range
  CHECK_THROWS_AS(OpTable(2, {0, 1, 0}), Error);     // wrong size
  CHECK_THROWS_AS(OpTable(0, {}), Error);            // empty carrier
  CHECK_THROWS_AS(Perm({0, 0}), Error);
}
