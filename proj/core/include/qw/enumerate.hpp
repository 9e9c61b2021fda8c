#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qw/axioms.hpp"
#include "qw/table.hpp"

namespace qw {

enum class CatalogKind { quandle, osq, stuquandle, bondle };

/// Canonical, pairwise non-isomorphic representatives of one structure kind.
struct Catalog {
  CatalogKind kind = CatalogKind::quandle;
  int order = 0;
  std::vector<StructureBundle> entries;  // sorted lexicographically
};

/// Result of sweeping all dot extensions of a fixed quandle.
struct ExtensionCatalog {
  OpTable star;
  OpTable slash;
  std::vector<OpTable> dots;      // lexicographic table order
  size_t raw_count = 0;           // = dots.size()
  size_t count_up_to_star_iso = 0;
};

/// Simultaneous relabeling of every role table by sigma.
StructureBundle relabel(const StructureBundle& b, const Perm& sigma);

/// Lexicographically least relabeling over the full symmetric group,
/// flattening roles in the fixed order star, slash, dot, circ, bullet.
/// Order is capped at 8.
StructureBundle canonical_form(const StructureBundle& b);

bool are_isomorphic(const StructureBundle& a, const StructureBundle& b);

/// All quandles of the given order up to isomorphism (order capped at 6).
/// column_order, when given, permutes the column assignment sequence of the
/// backtracking search; the resulting catalog is identical either way.
Catalog enumerate_quandles(int n, const std::vector<int>* column_order = nullptr);

/// Streams every dot table making (dot, star, slash) an oriented singquandle,
/// in lexicographic table order. Returning false stops the sweep.
void for_each_osq_extension(const OpTable& star, const OpTable& slash,
                            const std::function<bool(const OpTable&)>& visit);

/// Materialized sweep with raw and star-stabilizer-reduced counts (order capped at 4).
ExtensionCatalog enumerate_osq_extensions(const OpTable& star, const OpTable& slash);

/// First bundle (catalog order, then lexicographic bullet order) whose bullet
/// extension is an oriented singquandle but fails the bondle compatibility
/// identity. The result carries the witness table in both dot and bullet roles.
std::optional<StructureBundle> search_eq_bondles_counterexample(int max_order);

}  // namespace qw
