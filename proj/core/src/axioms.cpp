#include "qw/axioms.hpp"

namespace qw {

namespace {

// Scans (x, y) pairs in lexicographic order; pred returns true when the
// identity holds at the assignment.
template <typename Pred>
CheckReport scan2(int n, const char* label, Pred pred) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!pred(x, y)) return CheckReport::fail(label, {x, y});
  return CheckReport::pass();
}

template <typename Pred>
CheckReport scan3(int n, const char* label, Pred pred) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!pred(x, y, z)) return CheckReport::fail(label, {x, y, z});
  return CheckReport::pass();
}

bool columns_bijective(const OpTable& t, int* bad_col) {
  for (int y = 0; y < t.order(); ++y) {
    std::vector<bool> seen(t.order(), false);
    for (int x = 0; x < t.order(); ++x) {
      int v = t.at(x, y);
      if (seen[v]) {
        if (bad_col) *bad_col = y;
        return false;
      }
      seen[v] = true;
    }
  }
  return true;
}

CheckReport prefixed(CheckReport r, const std::string& prefix) {
  if (!r.ok) r.failed_axiom = prefix + r.failed_axiom;
  return r;
}

// The reduced two-identity oriented-singquandle system over a known quandle.
CheckReport osq_reduced_identities(const OpTable& dot, const OpTable& star) {
  int n = star.order();
  auto d = [&](int a, int b) { return dot.at(a, b); };
  auto s = [&](int a, int b) { return star.at(a, b); };
  if (auto r = scan3(n, "OSQ1", [&](int x, int y, int z) {
        return s(d(x, y), z) == d(s(x, z), s(y, z));
      });
      !r)
    return r;
  return scan3(n, "OSQ2", [&](int x, int y, int z) {
    return s(s(z, y), x) == s(s(z, d(x, y)), d(s(y, x), x));
  });
}

// Requires a quandle (star, slash) and reports "quandle" on failure,
// keeping the inner witness.
std::optional<CheckReport> require_quandle(const StructureBundle& b, OpTable& star_out,
                                           OpTable& slash_out) {
  if (!b.star) return CheckReport::fail("quandle", {});
  auto slash = b.slash;
  if (!slash) {
    int bad = -1;
    if (!columns_bijective(*b.star, &bad))
      return CheckReport::fail("quandle", {bad});
    slash = derive_right_inverse(*b.star);
  }
  CheckReport q = check_quandle(*b.star, &*slash);
  if (!q) return CheckReport::fail("quandle", q.witness);
  star_out = *b.star;
  slash_out = *slash;
  return std::nullopt;
}

}  // namespace

std::optional<OpTable> resolve_slash(const StructureBundle& b) {
  if (b.slash) return b.slash;
  if (!b.star || !columns_bijective(*b.star, nullptr)) return std::nullopt;
  return derive_right_inverse(*b.star);
}

ClassifyFlags classify(const OpTable& star) {
  int n = star.order();
  auto s = [&](int a, int b) { return star.at(a, b); };
  ClassifyFlags f;
  f.right_quasigroup = columns_bijective(star, nullptr);
  f.idempotent = true;
  for (int x = 0; x < n; ++x) f.idempotent = f.idempotent && s(x, x) == x;
  f.projection = true;
  f.involutory = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      f.projection = f.projection && s(x, y) == x;
      f.involutory = f.involutory && s(s(x, y), y) == x;
    }
  f.rack = f.right_quasigroup;
  if (f.rack)
    f.rack = bool(scan3(n, "", [&](int x, int y, int z) {
      return s(s(x, y), z) == s(s(x, z), s(y, z));
    }));
  f.quandle = f.idempotent && f.rack && f.right_quasigroup;
  f.two_reductive = true;
  for (int x = 0; x < n && f.two_reductive; ++x)
    for (int y = 0; y < n && f.two_reductive; ++y)
      for (int z = 0; z < n && f.two_reductive; ++z)
        for (int u = 0; u < n && f.two_reductive; ++u)
          f.two_reductive = s(x, s(y, z)) == s(x, s(y, u));
  return f;
}

CheckReport check_quandle(const OpTable& star, const OpTable* slash) {
  int n = star.order();
  auto s = [&](int a, int b) { return star.at(a, b); };
  for (int x = 0; x < n; ++x)
    if (s(x, x) != x) return CheckReport::fail("idempotent", {x});
  int bad = -1;
  if (!columns_bijective(star, &bad)) return CheckReport::fail("right_quasigroup", {bad});
  if (slash) {
    if (slash->order() != n) throw OrderMismatch();
    if (auto r = scan2(n, "right_inverse", [&](int x, int y) {
          return slash->at(s(x, y), y) == x && s(slash->at(x, y), y) == x;
        });
        !r)
      return r;
  }
  return scan3(n, "rack", [&](int x, int y, int z) {
    return s(s(x, y), z) == s(s(x, z), s(y, z));
  });
}

CheckReport check_osq(const StructureBundle& b, OsqMode mode) {
  OpTable star(1, {0}), slash(1, {0});
  if (auto fail = require_quandle(b, star, slash)) return *fail;
  if (!b.dot || b.dot->order() != star.order())
    return CheckReport::fail("missing_dot", {});
  const OpTable& dot = *b.dot;
  int n = star.order();
  auto d = [&](int a, int c) { return dot.at(a, c); };
  auto s = [&](int a, int c) { return star.at(a, c); };

  if (mode == OsqMode::reduced) return osq_reduced_identities(dot, star);

  if (auto r = scan3(n, "OS1'", [&](int x, int y, int z) {
        return s(d(y, x), z) == d(s(y, z), s(x, z));
      });
      !r)
    return r;
  if (auto r = scan3(n, "OS2'", [&](int x, int y, int z) {
        return s(d(x, d(y, x)), z) == d(s(x, z), d(s(y, z), s(x, z)));
      });
      !r)
    return r;
  if (auto r = scan3(n, "OS3'", [&](int x, int y, int z) {
        return s(s(y, x), z) == s(s(y, d(z, x)), d(s(x, z), z));
      });
      !r)
    return r;
  return scan2(n, "OS4'", [&](int x, int y) {
    return s(d(y, x), d(s(x, y), y)) == d(s(y, s(x, y)), s(x, y));
  });
}

CheckReport check_osq_rmaps(const OpTable& star, const OpTable& slash, const RMapPair& r) {
  StructureBundle b{star.order(), star, slash, std::nullopt, std::nullopt, std::nullopt};
  OpTable st(1, {0}), sl(1, {0});
  if (auto fail = require_quandle(b, st, sl)) return *fail;
  int n = star.order();
  auto s = [&](int a, int c) { return star.at(a, c); };
  auto r1 = [&](int a, int c) { return r.r1.at(a, c); };
  auto r2 = [&](int a, int c) { return r.r2.at(a, c); };

  if (auto rep = scan3(n, "OS1", [&](int x, int y, int z) {
        return s(r1(x, y), z) == r1(s(x, z), s(y, z));
      });
      !rep)
    return rep;
  if (auto rep = scan3(n, "OS2", [&](int x, int y, int z) {
        return s(r2(x, y), z) == r2(s(x, z), s(y, z));
      });
      !rep)
    return rep;
  if (auto rep = scan3(n, "OS3", [&](int x, int y, int z) {
        return s(s(y, x), z) == s(s(y, r1(x, z)), r2(x, z));
      });
      !rep)
    return rep;
  if (auto rep = scan2(n, "OS4", [&](int x, int y) {
        return s(r1(x, y), r2(x, y)) == r2(y, s(x, y));
      });
      !rep)
    return rep;
  return scan2(n, "OS5", [&](int x, int y) { return r2(x, y) == r1(y, s(x, y)); });
}

OpTable convert_rmaps_to_binop(const OpTable& r1) { return opposite(r1); }

RMapPair convert_binop_to_rmaps(const OpTable& dot, const OpTable& star) {
  if (dot.order() != star.order()) throw OrderMismatch();
  int n = dot.order();
  OpTable r1 = opposite(dot);
  OpTable r2 = OpTable::build(n, [&](int x, int y) { return star.at(dot.at(x, y), y); });
  return RMapPair{n, std::move(r1), std::move(r2), std::nullopt, std::nullopt};
}

CheckReport check_rho_criterion(const OpTable& star, const OpTable& slash) {
  StructureBundle b{star.order(), star, slash, std::nullopt, std::nullopt, std::nullopt};
  OpTable st(1, {0}), sl(1, {0});
  if (auto fail = require_quandle(b, st, sl)) return *fail;
  int n = star.order();
  return scan2(n, "rho_criterion", [&](int x, int y) {
    Perm lhs = right_translation(star, y).power(2);
    Perm rhs = right_translation(star, star.at(y, x))
                   .compose(right_translation(star, slash.at(y, x)));
    return lhs == rhs;
  });
}

CheckReport check_stuquandle(const StructureBundle& b, StuMode mode) {
  OpTable star(1, {0}), slash(1, {0});
  if (auto fail = require_quandle(b, star, slash)) return *fail;
  if (!b.dot || b.dot->order() != star.order()) return CheckReport::fail("missing_dot", {});
  if (!b.circ || b.circ->order() != star.order()) return CheckReport::fail("missing_circ", {});
  const OpTable& dot = *b.dot;
  const OpTable& circ = *b.circ;
  int n = star.order();
  auto s = [&](int a, int c) { return star.at(a, c); };
  auto sl = [&](int a, int c) { return slash.at(a, c); };
  auto o = [&](int a, int c) { return circ.at(a, c); };

  switch (mode) {
    case StuMode::binops: {
      if (auto r = prefixed(osq_reduced_identities(dot, star), "dot:"); !r) return r;
      if (auto r = scan2(n, "ST1'", [&](int x, int y) {
            return s(o(y, x), o(s(x, y), y)) == o(s(y, s(x, y)), s(x, y));
          });
          !r)
        return r;
      if (auto r = scan3(n, "ST3'", [&](int x, int y, int z) {
            return s(o(x, y), z) == o(s(x, z), s(y, z));
          });
          !r)
        return r;
      return scan3(n, "ST5'", [&](int x, int y, int z) {
        return sl(s(x, o(s(z, y), y)), y) == s(sl(x, o(y, z)), z);
      });
    }
    case StuMode::corollary: {
      if (auto r = prefixed(osq_reduced_identities(dot, star), "dot:"); !r) return r;
      return prefixed(osq_reduced_identities(circ, star), "circ:");
    }
    case StuMode::rmaps: {
      RMapPair pair = convert_binop_to_rmaps(dot, star);
      if (auto r = check_osq_rmaps(star, slash, pair); !r) return r;
      // R3(x,y) = x circ y, R4(x,y) = (y*x) circ x.
      auto r3 = [&](int a, int c) { return o(a, c); };
      auto r4 = [&](int a, int c) { return o(s(c, a), a); };
      if (auto r = scan2(n, "ST1", [&](int x, int y) {
            return s(r3(y, x), r4(y, x)) == r4(s(x, y), y);
          });
          !r)
        return r;
      if (auto r = scan2(n, "ST2", [&](int x, int y) {
            return r4(y, x) == r3(s(x, y), y);
          });
          !r)
        return r;
      if (auto r = scan3(n, "ST3", [&](int x, int y, int z) {
            return r3(s(y, x), z) == s(r3(y, sl(z, x)), x);
          });
          !r)
        return r;
      if (auto r = scan3(n, "ST4", [&](int x, int y, int z) {
            return r4(y, sl(z, x)) == sl(r4(s(y, x), z), x);
          });
          !r)
        return r;
      return scan3(n, "ST5", [&](int x, int y, int z) {
        return sl(s(x, r4(y, z)), y) == s(sl(x, r3(y, z)), z);
      });
    }
  }
  return CheckReport::fail("bad_mode", {});
}

CheckReport check_eq_bondles(const OpTable& bullet, const OpTable& star) {
  if (bullet.order() != star.order()) throw OrderMismatch();
  int n = star.order();
  auto bu = [&](int a, int c) { return bullet.at(a, c); };
  auto s = [&](int a, int c) { return star.at(a, c); };
  return scan2(n, "eq_bondles", [&](int x, int y) {
    return bu(s(y, x), x) == bu(s(y, bu(x, y)), x);
  });
}

CheckReport check_bondle(const StructureBundle& b, BondleMode mode) {
  OpTable star(1, {0}), slash(1, {0});
  if (auto fail = require_quandle(b, star, slash)) return *fail;
  if (!b.dot || b.dot->order() != star.order()) return CheckReport::fail("missing_dot", {});
  if (!b.bullet || b.bullet->order() != star.order())
    return CheckReport::fail("missing_bullet", {});
  const OpTable& dot = *b.dot;
  const OpTable& bullet = *b.bullet;
  int n = star.order();
  auto s = [&](int a, int c) { return star.at(a, c); };
  auto sl = [&](int a, int c) { return slash.at(a, c); };
  auto bu = [&](int a, int c) { return bullet.at(a, c); };

  switch (mode) {
    case BondleMode::binops: {
      if (auto r = prefixed(osq_reduced_identities(dot, star), "dot:"); !r) return r;
      if (auto r = scan3(n, "OB1'", [&](int x, int y, int z) {
            return s(bu(x, y), z) == bu(s(x, z), s(y, z));
          });
          !r)
        return r;
      if (auto r = scan3(n, "OB3'", [&](int x, int y, int z) {
            return s(sl(z, bu(y, x)), x) == s(sl(z, y), bu(x, y));
          });
          !r)
        return r;
      return scan2(n, "OB4'", [&](int x, int y) {
        return sl(bu(y, x), y) == bu(y, sl(x, bu(x, y)));
      });
    }
    case BondleMode::theorem: {
      if (auto r = prefixed(osq_reduced_identities(dot, star), "dot:"); !r) return r;
      if (auto r = prefixed(osq_reduced_identities(bullet, star), "bullet:"); !r) return r;
      return check_eq_bondles(bullet, star);
    }
    case BondleMode::rmaps: {
      RMapPair pair = convert_binop_to_rmaps(dot, star);
      if (auto r = check_osq_rmaps(star, slash, pair); !r) return r;
      // R3(x,y) = y bullet x.
      auto r3 = [&](int a, int c) { return bu(c, a); };
      if (auto r = scan3(n, "OB1", [&](int x, int y, int z) {
            return r3(s(y, z), s(x, z)) == s(r3(y, x), z);
          });
          !r)
        return r;
      if (auto r = scan3(n, "OB2", [&](int x, int y, int z) {
            return r3(sl(x, z), sl(y, z)) == sl(r3(x, y), z);
          });
          !r)
        return r;
      if (auto r = scan3(n, "OB3", [&](int x, int y, int z) {
            return s(sl(z, r3(x, y)), x) == s(sl(z, y), r3(y, x));
          });
          !r)
        return r;
      return scan2(n, "OB4", [&](int x, int y) {
        return sl(r3(x, y), y) == r3(sl(x, r3(y, x)), y);
      });
    }
  }
  return CheckReport::fail("bad_mode", {});
}

}  // namespace qw
