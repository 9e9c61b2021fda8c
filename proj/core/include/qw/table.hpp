#pragma once

#include <optional>
#include <vector>

#include "qw/errors.hpp"

namespace qw {

/// An n x n operation table over the carrier {0,...,n-1}.
/// entries(x, y) = x op y; the row is the left argument.
class OpTable {
 public:
  OpTable(int order, std::vector<int> entries);

  /// Table filled with a single constant function of (x, y).
  template <typename F>
  static OpTable build(int order, F f) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(order) * order);
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y) e.push_back(f(x, y));
    return OpTable(order, std::move(e));
  }

  int order() const { return order_; }
  int at(int x, int y) const { return entries_[static_cast<size_t>(x) * order_ + y]; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const OpTable&) const = default;
  bool operator<(const OpTable& o) const { return entries_ < o.entries_; }

 private:
  int order_;
  std::vector<int> entries_;
};

/// A permutation of {0,...,n-1}, stored as its image array.
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int order);

  int order() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  /// (a * b)(x) = a(b(x)); b acts first.
  Perm compose(const Perm& rhs) const;
  Perm inverse() const;
  Perm power(int k) const;
  bool is_identity() const;
  bool commutes_with(const Perm& other) const;

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

/// A finitely generated permutation group, with its full element closure.
class PermGroup {
 public:
  PermGroup(int order, std::vector<Perm> generators);

  int order() const { return order_; }
  const std::vector<Perm>& generators() const { return generators_; }
  /// Sorted by image array; always contains the identity.
  const std::vector<Perm>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }

 private:
  int order_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

/// A carrier plus named operation roles. The roles a checker needs depend
/// on the structure kind; absent roles stay disengaged.
struct StructureBundle {
  int order = 0;
  std::optional<OpTable> star;
  std::optional<OpTable> slash;
  std::optional<OpTable> dot;
  std::optional<OpTable> circ;
  std::optional<OpTable> bullet;

  bool operator==(const StructureBundle&) const = default;
};

/// R_y as a permutation: x -> x op y. Throws NotBijective if column y is not one.
Perm right_translation(const OpTable& op, int y);

/// Table of x / y = R_y^{-1}(x). Requires every column bijective.
OpTable derive_right_inverse(const OpTable& op);

/// x op' y = y op x.
OpTable opposite(const OpTable& op);

/// Table of R_y^k(x); k may be negative.
OpTable power_op(const OpTable& op, int k);

/// Right multiplication group: closure of {R_y : y in carrier}.
PermGroup rmlt_group(const OpTable& star);

bool is_abelian(const PermGroup& g);

}  // namespace qw
