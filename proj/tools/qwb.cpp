// Command line front end for the quandle workbench.
//
// Carriers are always {0,...,n-1}. Printed literature tables are usually
// 1-indexed; shift every element down by one when preparing input files.
//
// Exit codes: 0 ok / 1 checked property fails / 2 input error / 3 not found.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qw/constructions.hpp"
#include "qw/enumerate.hpp"
#include "qw/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotFound = 3;

struct InputError {
  std::string message;
};

qw::json load_json(const std::string& path) {
  try {
    if (path == "-") return qw::json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError{"cannot open " + path};
    return qw::json::parse(in);
  } catch (const qw::json::parse_error& e) {
    throw InputError{std::string("malformed JSON: ") + e.what()};
  }
}

qw::StructureBundle load_bundle(const std::string& path) {
  try {
    return qw::bundle_from_json(load_json(path));
  } catch (const qw::Error& e) {
    throw InputError{e.what()};
  }
}

const qw::OpTable& need_role(const std::optional<qw::OpTable>& t, const char* name) {
  if (!t) throw InputError{std::string("input bundle is missing role \"") + name + "\""};
  return *t;
}

void emit_bundle(const qw::StructureBundle& b, const qw::json& meta, bool pretty) {
  std::cout << qw::bundle_to_json(b, meta).dump() << "\n";
  if (pretty) std::cerr << qw::pretty_bundle(b);
}

int run_check(const std::string& kind, const std::string& input, const std::string& mode) {
  qw::StructureBundle b = load_bundle(input);
  qw::CheckReport report;
  if (kind == "quandle") {
    report = qw::check_quandle(*b.star, b.slash ? &*b.slash : nullptr);
  } else if (kind == "osq") {
    need_role(b.dot, "dot");
    qw::OsqMode m = qw::OsqMode::reduced;
    if (mode == "full") m = qw::OsqMode::full;
    else if (!mode.empty() && mode != "reduced") throw InputError{"osq mode must be full or reduced"};
    report = qw::check_osq(b, m);
  } else if (kind == "stuquandle") {
    need_role(b.dot, "dot");
    need_role(b.circ, "circ");
    qw::StuMode m = qw::StuMode::binops;
    if (mode == "rmaps") m = qw::StuMode::rmaps;
    else if (mode == "corollary") m = qw::StuMode::corollary;
    else if (!mode.empty() && mode != "binops")
      throw InputError{"stuquandle mode must be binops, rmaps or corollary"};
    report = qw::check_stuquandle(b, m);
  } else if (kind == "bondle") {
    need_role(b.dot, "dot");
    need_role(b.bullet, "bullet");
    qw::BondleMode m = qw::BondleMode::binops;
    if (mode == "rmaps") m = qw::BondleMode::rmaps;
    else if (mode == "theorem") m = qw::BondleMode::theorem;
    else if (!mode.empty() && mode != "binops")
      throw InputError{"bondle mode must be binops, rmaps or theorem"};
    report = qw::check_bondle(b, m);
  } else if (kind == "eq-bondles") {
    report = qw::check_eq_bondles(need_role(b.bullet, "bullet"), *b.star);
  } else {
    throw InputError{"unknown kind " + kind};
  }
  std::cout << qw::report_to_json(report).dump() << "\n";
  return report.ok ? kExitOk : kExitFail;
}

int run_convert(const std::string& direction, const std::string& input) {
  qw::json j = load_json(input);
  if (direction == "to-rmaps") {
    qw::StructureBundle b = load_bundle(input);
    const qw::OpTable& dot = need_role(b.dot, "dot");
    qw::RMapPair pair = qw::convert_binop_to_rmaps(dot, *b.star);
    qw::StructureBundle quandle_part{b.order, b.star, b.slash,
                                     std::nullopt, std::nullopt, std::nullopt};
    std::cout << qw::rmaps_to_json(quandle_part, pair).dump() << "\n";
    return kExitOk;
  }
  if (direction == "to-binop") {
    if (!j.is_object() || !j.contains("order") || !j.contains("rmaps") ||
        !j["rmaps"].contains("R1"))
      throw InputError{"to-binop input needs \"order\" and \"rmaps\".\"R1\""};
    int n = j["order"].get<int>();
    if (n < 1) throw InputError{"order must be positive"};
    qw::OpTable r1(1, {0});
    try {
      r1 = qw::table_from_json(j["rmaps"]["R1"], n);
      if (j.contains("ops") && j["ops"].contains("star"))
        (void)qw::table_from_json(j["ops"]["star"], n);
    } catch (const qw::Error& e) {
      throw InputError{e.what()};
    }
    qw::OpTable dot = qw::convert_rmaps_to_binop(r1);
    qw::StructureBundle out;
    out.order = n;
    out.dot = dot;
    if (j.contains("ops")) {
      try {
        qw::json wrapped = {{"order", n}, {"ops", j["ops"]}};
        qw::StructureBundle quandle = qw::bundle_from_json(wrapped);
        out.star = quandle.star;
        out.slash = quandle.slash;
      } catch (const qw::Error& e) {
        throw InputError{e.what()};
      }
    }
    std::cout << qw::bundle_to_json(out).dump() << "\n";
    return kExitOk;
  }
  throw InputError{"direction must be to-rmaps or to-binop"};
}

int run_construct(const std::string& family, const std::string& input, int order, int n, int m,
                  bool relaxed, bool pretty) {
  try {
    if (family == "projection" || family == "dihedral") {
      if (order < 1) throw InputError{"--order is required and must be positive"};
      qw::StructureBundle b =
          family == "projection" ? qw::projection_quandle(order) : qw::dihedral_quandle(order);
      emit_bundle(b, {{"family", family}, {"order", order}}, pretty);
      return kExitOk;
    }
    if (family == "mesh") {
      if (input.empty()) throw InputError{"mesh needs --input with a mesh file"};
      qw::json j = load_json(input);
      qw::MeshSpec spec = qw::mesh_from_json(j);
      if (relaxed) spec.relaxed = true;
      qw::StructureBundle b = qw::affine_mesh(spec);
      qw::json meta = {{"family", "mesh"},
                       {"components", j["components"]},
                       {"constants", j["constants"]},
                       {"relaxed", spec.relaxed}};
      emit_bundle(b, meta, pretty);
      return kExitOk;
    }
    if (family == "power-osq" || family == "power-bondle") {
      if (input.empty()) throw InputError{family + " needs --input with a quandle bundle"};
      qw::StructureBundle q = load_bundle(input);
      qw::StructureBundle b = family == "power-osq"
                                  ? qw::power_osq(*q.star, *q.slash, n, m)
                                  : qw::power_bondle(*q.star, *q.slash, n, m);
      emit_bundle(b, {{"family", family}, {"n", n}, {"m", m}}, pretty);
      return kExitOk;
    }
    if (family == "trivial-stuquandle") {
      if (input.empty()) throw InputError{"trivial-stuquandle needs --input with an osq bundle"};
      qw::StructureBundle q = load_bundle(input);
      qw::StructureBundle b =
          qw::trivial_stuquandle(need_role(q.dot, "dot"), *q.star, *q.slash);
      emit_bundle(b, {{"family", "trivial-stuquandle"}}, pretty);
      return kExitOk;
    }
  } catch (const qw::Error& e) {
    throw InputError{e.what()};
  }
  throw InputError{"unknown family " + family};
}

int run_enumerate(const std::string& kind, int order, const std::string& input,
                  const std::string& output) {
  std::ofstream file;
  std::ostream* lines = &std::cout;
  bool to_file = !output.empty();
  if (to_file) {
    file.open(output);
    if (!file) throw InputError{"cannot open " + output + " for writing"};
    lines = &file;
  }
  std::ostream& counts = to_file ? std::cout : std::cerr;

  try {
    if (kind == "quandle") {
      if (order < 1) throw InputError{"--order is required and must be positive"};
      qw::Catalog cat = qw::enumerate_quandles(order);
      for (const auto& b : cat.entries) *lines << qw::bundle_to_json(b).dump() << "\n";
      counts << cat.entries.size() << "\n";
      return kExitOk;
    }
    if (kind == "osq-extensions") {
      if (input.empty()) throw InputError{"osq-extensions needs --input with a quandle bundle"};
      qw::StructureBundle q = load_bundle(input);
      qw::ExtensionCatalog ext = qw::enumerate_osq_extensions(*q.star, *q.slash);
      for (const auto& dot : ext.dots) {
        qw::StructureBundle b{q.order, q.star, q.slash, dot, std::nullopt, std::nullopt};
        *lines << qw::bundle_to_json(b).dump() << "\n";
      }
      counts << ext.raw_count << " " << ext.count_up_to_star_iso << "\n";
      return kExitOk;
    }
  } catch (const qw::Error& e) {
    throw InputError{e.what()};
  }
  throw InputError{"unknown kind " + kind};
}

int run_search(const std::string& property, int max_order, bool pretty) {
  if (property != "eq-bondles-fails") throw InputError{"unknown property " + property};
  try {
    auto found = qw::search_eq_bondles_counterexample(max_order);
    if (!found) return kExitNotFound;
    emit_bundle(*found, {{"search", property}, {"max_order", max_order}}, pretty);
    return kExitOk;
  } catch (const qw::Error& e) {
    throw InputError{e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite quandle workbench: axiom checking, presentation conversion,\n"
      "constructions and small-order enumeration. Tables are JSON, 0-indexed\n"
      "(element k of a 1-indexed presentation corresponds to file entry k-1)."};
  app.require_subcommand(1);

  std::string kind, mode, input, output, direction, family, property;
  int order = 0, max_order = 0, pow_n = 1, pow_m = 1;
  bool relaxed = false, pretty = false;
  unsigned seed = 0;

  auto* check = app.add_subcommand("check", "Check axioms of a bundle file");
  check->add_option("--kind", kind, "quandle|osq|stuquandle|bondle|eq-bondles")->required();
  check->add_option("--input", input, "bundle JSON file")->required();
  check->add_option("--mode", mode, "osq: full|reduced; stuquandle: binops|rmaps|corollary; "
                                    "bondle: binops|rmaps|theorem");

  auto* convert = app.add_subcommand("convert", "Convert between map and binary-op presentations");
  convert->add_option("direction", direction, "to-rmaps|to-binop")->required();
  convert->add_option("--input", input, "input JSON file")->required();

  auto* construct = app.add_subcommand("construct", "Build a structure from a named family");
  construct->add_option("family", family,
                        "projection|dihedral|mesh|power-osq|power-bondle|trivial-stuquandle")
      ->required();
  construct->add_option("--input", input, "mesh file or input bundle");
  construct->add_option("--order", order, "carrier size for projection/dihedral");
  construct->add_option("--n", pow_n, "first power exponent");
  construct->add_option("--m", pow_m, "second power exponent");
  construct->add_flag("--relaxed", relaxed, "skip the mesh generation condition");
  construct->add_flag("--pretty", pretty, "also render Cayley tables on stderr");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate structures up to isomorphism");
  enumerate->add_option("--kind", kind, "quandle|osq-extensions")->required();
  enumerate->add_option("--order", order, "carrier size (kind=quandle)");
  enumerate->add_option("--input", input, "quandle bundle (kind=osq-extensions)");
  enumerate->add_option("--output", output, "JSONL catalog path (default: stdout)");

  auto* search = app.add_subcommand("search", "Property-directed counterexample search");
  search->add_option("property", property, "eq-bondles-fails")->required();
  search->add_option("--max-order", max_order, "largest carrier size to scan")->required();
  search->add_flag("--pretty", pretty, "also render Cayley tables on stderr");

  app.add_option("--seed", seed, "seed for randomized tooling (reserved)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (check->parsed()) return run_check(kind, input, mode);
    if (convert->parsed()) return run_convert(direction, input);
    if (construct->parsed())
      return run_construct(family, input, order, pow_n, pow_m, relaxed, pretty);
    if (enumerate->parsed()) return run_enumerate(kind, order, input, output);
    if (search->parsed()) return run_search(property, max_order, pretty);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  } catch (const qw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
