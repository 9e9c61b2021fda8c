#include "qw/table.hpp"

#include <algorithm>
#include <set>

namespace qw {

OpTable::OpTable(int order, std::vector<int> entries) : order_(order), entries_(std::move(entries)) {
  if (order < 1) throw Error("table order must be positive");
  if (entries_.size() != static_cast<size_t>(order) * order)
    throw Error("entry array is not order x order");
  for (int e : entries_)
    if (e < 0 || e >= order) throw Error("table entry out of carrier range");
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw Error("image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int order) {
  std::vector<int> im(order);
  for (int i = 0; i < order; ++i) im[i] = i;
  return Perm(std::move(im));
}

Perm Perm::compose(const Perm& rhs) const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[i] = images_[rhs.images_[i]];
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Perm(std::move(im));
}

Perm Perm::power(int k) const {
  Perm base = k >= 0 ? *this : inverse();
  int reps = k >= 0 ? k : -k;
  Perm acc = identity(order());
  for (int i = 0; i < reps; ++i) acc = base.compose(acc);
  return acc;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Perm::commutes_with(const Perm& other) const {
  return compose(other) == other.compose(*this);
}

PermGroup::PermGroup(int order, std::vector<Perm> generators)
    : order_(order), generators_(std::move(generators)) {
  std::set<Perm> closure;
  closure.insert(Perm::identity(order));
  std::vector<Perm> frontier(closure.begin(), closure.end());
  for (const Perm& g : generators_) {
    if (closure.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& f : frontier)
      for (const Perm& g : generators_) {
        Perm p = g.compose(f);
        if (closure.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  elements_.assign(closure.begin(), closure.end());
}

Perm right_translation(const OpTable& op, int y) {
  std::vector<int> im(op.order());
  std::vector<bool> seen(op.order(), false);
  for (int x = 0; x < op.order(); ++x) {
    int v = op.at(x, y);
    if (seen[v]) throw NotBijective(y);
    seen[v] = true;
    im[x] = v;
  }
  return Perm(std::move(im));
}

OpTable derive_right_inverse(const OpTable& op) {
  int n = op.order();
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int y = 0; y < n; ++y) {
    Perm inv = right_translation(op, y).inverse();
    for (int x = 0; x < n; ++x) entries[static_cast<size_t>(x) * n + y] = inv.apply(x);
  }
  return OpTable(n, std::move(entries));
}

OpTable opposite(const OpTable& op) {
  return OpTable::build(op.order(), [&](int x, int y) { return op.at(y, x); });
}

OpTable power_op(const OpTable& op, int k) {
  int n = op.order();
  std::vector<int> entries(static_cast<size_t>(n) * n);
  for (int y = 0; y < n; ++y) {
    Perm p = right_translation(op, y).power(k);
    for (int x = 0; x < n; ++x) entries[static_cast<size_t>(x) * n + y] = p.apply(x);
  }
  return OpTable(n, std::move(entries));
}

PermGroup rmlt_group(const OpTable& star) {
  std::vector<Perm> gens;
  for (int y = 0; y < star.order(); ++y) gens.push_back(right_translation(star, y));
  return PermGroup(star.order(), std::move(gens));
}

bool is_abelian(const PermGroup& g) {
  const auto& els = g.elements();
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = i + 1; j < els.size(); ++j)
      if (!els[i].commutes_with(els[j])) return false;
  return true;
}

}  // namespace qw
