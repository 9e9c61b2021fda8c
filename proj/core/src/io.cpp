#include "qw/io.hpp"

#include <sstream>

namespace qw {

json table_to_json(const OpTable& t) {
  json rows = json::array();
  for (int x = 0; x < t.order(); ++x) {
    json row = json::array();
    for (int y = 0; y < t.order(); ++y) row.push_back(t.at(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

OpTable table_from_json(const json& j, int order) {
  if (!j.is_array() || static_cast<int>(j.size()) != order)
    throw BadInput("table is not an array of " + std::to_string(order) + " rows");
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(order) * order);
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw BadInput("table row has wrong length");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw BadInput("table entry is not an integer");
      int e = v.get<int>();
      if (e < 0 || e >= order) throw BadInput("table entry out of range");
      entries.push_back(e);
    }
  }
  return OpTable(order, std::move(entries));
}

json bundle_to_json(const StructureBundle& b, const json& meta) {
  json ops = json::object();
  const std::pair<const char*, const std::optional<OpTable>*> roles[] = {
      {"star", &b.star}, {"slash", &b.slash}, {"dot", &b.dot},
      {"circ", &b.circ}, {"bullet", &b.bullet}};
  for (auto [name, t] : roles)
    if (t->has_value()) ops[name] = table_to_json(**t);
  json out = json::object();
  out["order"] = b.order;
  out["ops"] = std::move(ops);
  if (!meta.is_null() && !meta.empty()) out["meta"] = meta;
  return out;
}

StructureBundle bundle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("ops"))
    throw BadInput("bundle file needs \"order\" and \"ops\"");
  if (!j["order"].is_number_integer()) throw BadInput("\"order\" is not an integer");
  int n = j["order"].get<int>();
  if (n < 1) throw BadInput("order must be positive");
  const json& ops = j["ops"];
  if (!ops.is_object()) throw BadInput("\"ops\" is not an object");

  StructureBundle b;
  b.order = n;
  const std::pair<const char*, std::optional<OpTable>*> roles[] = {
      {"star", &b.star}, {"slash", &b.slash}, {"dot", &b.dot},
      {"circ", &b.circ}, {"bullet", &b.bullet}};
  for (auto [name, slot] : roles)
    if (ops.contains(name)) *slot = table_from_json(ops[name], n);
  for (const auto& [key, val] : ops.items()) {
    (void)val;
    if (key != "star" && key != "slash" && key != "dot" && key != "circ" && key != "bullet")
      throw BadInput("unknown op role \"" + key + "\"");
  }
  if (!b.star) throw BadInput("bundle file needs a \"star\" table");
  if (!b.slash) {
    b.slash = resolve_slash(b);
    if (!b.slash) throw BadInput("\"slash\" omitted but \"star\" is not a right quasigroup");
  }
  return b;
}

json report_to_json(const CheckReport& r) {
  json out = json::object();
  out["ok"] = r.ok;
  if (!r.ok) {
    out["failed_axiom"] = r.failed_axiom;
    out["witness"] = r.witness;
  }
  return out;
}

MeshSpec mesh_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j.contains("constants"))
    throw BadInput("mesh file needs \"components\" and \"constants\"");
  MeshSpec spec;
  for (const auto& comp : j["components"]) {
    if (!comp.is_array()) throw BadInput("component is not a moduli list");
    std::vector<int> moduli;
    for (const auto& m : comp) {
      if (!m.is_number_integer() || m.get<int>() < 1)
        throw BadInput("modulus must be a positive integer");
      moduli.push_back(m.get<int>());
    }
    spec.components.push_back(std::move(moduli));
  }
  for (const auto& row : j["constants"]) {
    if (!row.is_array()) throw BadInput("constants must be a matrix of tuples");
    std::vector<std::vector<int>> out_row;
    for (const auto& cell : row) {
      if (!cell.is_array()) throw BadInput("constant entry must be a residue tuple");
      std::vector<int> tup;
      for (const auto& v : cell) {
        if (!v.is_number_integer()) throw BadInput("residue must be an integer");
        tup.push_back(v.get<int>());
      }
      out_row.push_back(std::move(tup));
    }
    spec.constants.push_back(std::move(out_row));
  }
  if (j.contains("relaxed")) {
    if (!j["relaxed"].is_boolean()) throw BadInput("\"relaxed\" must be a boolean");
    spec.relaxed = j["relaxed"].get<bool>();
  }
  return spec;
}

json rmaps_to_json(const StructureBundle& quandle_part, const RMapPair& r) {
  json out = json::object();
  out["order"] = r.order;
  json ops = json::object();
  if (quandle_part.star) ops["star"] = table_to_json(*quandle_part.star);
  if (quandle_part.slash) ops["slash"] = table_to_json(*quandle_part.slash);
  out["ops"] = std::move(ops);
  json rmaps = json::object();
  rmaps["R1"] = table_to_json(r.r1);
  rmaps["R2"] = table_to_json(r.r2);
  if (r.r3) rmaps["R3"] = table_to_json(*r.r3);
  if (r.r4) rmaps["R4"] = table_to_json(*r.r4);
  out["rmaps"] = std::move(rmaps);
  return out;
}

std::string pretty_bundle(const StructureBundle& b) {
  std::ostringstream os;
  const std::pair<const char*, const std::optional<OpTable>*> roles[] = {
      {"star", &b.star}, {"slash", &b.slash}, {"dot", &b.dot},
      {"circ", &b.circ}, {"bullet", &b.bullet}};
  for (auto [name, t] : roles) {
    if (!t->has_value()) continue;
    os << name << ":\n";
    for (int x = 0; x < b.order; ++x) {
      os << " ";
      for (int y = 0; y < b.order; ++y) os << " " << (*t)->at(x, y);
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace qw
