#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qw/table.hpp"

namespace qw {

/// Verdict of an axiom check. On failure carries the label of the first
/// violated identity and the lexicographically least witness assignment.
struct CheckReport {
  bool ok = true;
  std::string failed_axiom;
  std::vector<int> witness;

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string axiom, std::vector<int> w) {
    return {false, std::move(axiom), std::move(w)};
  }
  explicit operator bool() const { return ok; }
};

/// The map presentation of singquandle-like structures.
/// Each table is a binary function: rN.at(x, y) = R_N(x, y).
struct RMapPair {
  int order = 0;
  OpTable r1;
  OpTable r2;
  std::optional<OpTable> r3;
  std::optional<OpTable> r4;
};

struct ClassifyFlags {
  bool right_quasigroup = false;
  bool idempotent = false;
  bool projection = false;
  bool involutory = false;
  bool rack = false;
  bool quandle = false;
  bool two_reductive = false;

  bool operator==(const ClassifyFlags&) const = default;
};

enum class OsqMode { full, reduced };
enum class StuMode { binops, rmaps, corollary };
enum class BondleMode { binops, rmaps, theorem };

ClassifyFlags classify(const OpTable& star);

/// Quandle axioms for (star, slash). slash == nullptr skips the explicit
/// right-inverse identities (column bijectivity is still required).
CheckReport check_quandle(const OpTable& star, const OpTable* slash);

/// Oriented singquandle check for bundle roles {dot, star, slash}.
/// full mode evaluates the four defining identities, reduced mode the
/// equivalent two-identity system; both agree on every input.
CheckReport check_osq(const StructureBundle& b, OsqMode mode);

/// Original map-presentation axioms OS1-OS5 for (star, slash, R1, R2).
CheckReport check_osq_rmaps(const OpTable& star, const OpTable& slash, const RMapPair& r);

/// dot.at(y, x) = R1.at(x, y).
OpTable convert_rmaps_to_binop(const OpTable& r1);

/// R1(x,y) = y dot x; R2(x,y) = (x dot y) * y.
RMapPair convert_binop_to_rmaps(const OpTable& dot, const OpTable& star);

/// For all x, y: rho_y^2 = rho_{y*x} rho_{y/x} (rightmost factor applied
/// first). Equivalent to (star, star, slash) being an oriented singquandle.
CheckReport check_rho_criterion(const OpTable& star, const OpTable& slash);

/// Stuquandle check for roles {dot, circ, star, slash}; all modes agree.
CheckReport check_stuquandle(const StructureBundle& b, StuMode mode);

/// Oriented bondle check for roles {dot, bullet, star, slash}; all modes agree.
CheckReport check_bondle(const StructureBundle& b, BondleMode mode);

/// The bondle compatibility identity (y*x) bullet x = (y*(x bullet y)) bullet x.
CheckReport check_eq_bondles(const OpTable& bullet, const OpTable& star);

/// slash from the bundle, derived from star when absent.
/// Empty when star is not a right quasigroup.
std::optional<OpTable> resolve_slash(const StructureBundle& b);

}  // namespace qw
