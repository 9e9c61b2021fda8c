#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qw/axioms.hpp"
#include "qw/constructions.hpp"
#include "qw/table.hpp"

namespace qw {

using json = nlohmann::ordered_json;

struct BadInput : Error {
  using Error::Error;
};

json table_to_json(const OpTable& t);
OpTable table_from_json(const json& j, int order);

/// Serializes roles in the fixed order star, slash, dot, circ, bullet;
/// key order is stable so output is byte-reproducible.
json bundle_to_json(const StructureBundle& b, const json& meta = json());

/// Parses a bundle file. Missing slash is derived from star; a star that is
/// not a right quasigroup is rejected in that case.
StructureBundle bundle_from_json(const json& j);

json report_to_json(const CheckReport& r);

MeshSpec mesh_from_json(const json& j);

json rmaps_to_json(const StructureBundle& quandle_part, const RMapPair& r);

/// Plain text Cayley tables, for debugging output only.
std::string pretty_bundle(const StructureBundle& b);

}  // namespace qw
