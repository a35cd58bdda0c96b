#include "mlat/io.hpp"

#include <fstream>

#include "mlat/chain_parser.hpp"
#include "mlat/error.hpp"

namespace mlat {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Schema, what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::uint32_t as_label(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
      v.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    schema_error(where + ": expected a non-negative integer");
  }
  return v.get<std::uint32_t>();
}

Multigraph parse_graph(const Json& doc, const Palette& palette, const std::string& name) {
  const auto where = "graph \"" + name + "\"";
  const auto& nodes = field(doc, "nodes", where);
  if (!nodes.is_array()) schema_error(where + ": \"nodes\" must be an array");
  std::vector<std::uint32_t> labels;
  for (const auto& n : nodes) labels.push_back(as_label(n, where + " node"));

  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    const auto& list = doc.at("edges");
    if (!list.is_array()) schema_error(where + ": \"edges\" must be an array");
    for (const auto& e : list) {
      EdgeSpec spec;
      spec.u = as_label(field(e, "u", where), where + " edge u");
      spec.v = as_label(field(e, "v", where), where + " edge v");
      const auto& color = field(e, "color", where);
      if (!color.is_string()) schema_error(where + ": edge colour must be a string");
      spec.color = color.get<std::string>();
      if (e.contains("mult")) {
        const auto& m = e.at("mult");
        if (!m.is_number_integer() || m.get<std::int64_t>() < 1) {
          throw Error(ErrorKind::InvalidMultiplicity, where + ": mult must be an integer >= 1");
        }
        spec.mult = m.get<std::uint32_t>();
      }
      edges.push_back(std::move(spec));
    }
  }
  return Multigraph(palette, labels, edges);
}

Json cell_ref(const CellRef& r) {
  Json out = Json::object();
  Json vs = Json::array();
  for (auto v : r.vertices) vs.push_back(v.value);
  out["vertices"] = std::move(vs);
  out["copy"] = r.copy;
  return out;
}

CellRef parse_ref(const Json& doc, const std::string& where) {
  CellRef r;
  const auto& vs = field(doc, "vertices", where);
  if (!vs.is_array() || vs.empty()) schema_error(where + ": \"vertices\" must be a non-empty array");
  for (const auto& v : vs) r.vertices.emplace_back(as_label(v, where));
  r.copy = as_label(field(doc, "copy", where), where);
  return r;
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(path.string() + ": " + e.what());
  }
}

}  // namespace

Multicomplex complex_from_json(const Json& doc) {
  const auto& colors = field(doc, "palette", "complex");
  std::vector<std::string> names;
  for (const auto& c : colors) {
    if (!c.is_string()) schema_error("\"palette\" must hold strings");
    names.push_back(c.get<std::string>());
  }
  const auto policy =
      doc.contains("policy") ? parse_policy(doc.at("policy").get<std::string>()) : CellPolicy::Canonical;
  const auto& dims = field(doc, "cells", "complex");
  if (!dims.is_array()) schema_error("\"cells\" must be an array per dimension");
  std::vector<std::vector<Multicell>> cells;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    const auto where = "complex " + std::to_string(d) + "-cell";
    cells.emplace_back();
    for (const auto& c : dims[d]) {
      Multicell cell;
      cell.id = parse_ref(c, where);
      if (c.contains("faces")) {
        for (const auto& f : c.at("faces")) cell.faces.push_back(parse_ref(f, where + " face"));
      }
      if (d == 1) {
        const auto& cs = field(c, "colors", where);
        if (!cs.is_array() || cs.size() != 1 || !cs[0].is_string()) {
          schema_error(where + ": a 1-cell lists exactly one colour");
        }
        cell.color = ColorId(cs[0].get<std::string>());
      }
      cells.back().push_back(std::move(cell));
    }
  }
  return Multicomplex(make_palette(names), std::move(cells), policy);
}

Multicomplex load_complex(const std::filesystem::path& path) {
  return complex_from_json(read_file(path));
}

Workspace parse_workspace(const Json& doc) {
  if (!doc.is_object()) schema_error("workspace must be a JSON object");
  const auto& colors = field(doc, "colors", "workspace");
  if (!colors.is_array()) schema_error("\"colors\" must be an array of strings");
  std::vector<std::string> names;
  for (const auto& c : colors) {
    if (!c.is_string()) schema_error("\"colors\" must be an array of strings");
    names.push_back(c.get<std::string>());
  }

  Workspace ws;
  ws.env.palette = make_palette(names);
  const auto& graphs = field(doc, "graphs", "workspace");
  if (!graphs.is_object()) schema_error("\"graphs\" must be an object");
  for (const auto& [name, g] : graphs.items()) {
    ws.env.graphs.emplace(name, parse_graph(g, ws.env.palette, name));
  }
  if (doc.contains("chain")) {
    if (!doc.at("chain").is_string()) schema_error("\"chain\" must be a string");
    ws.chain = doc.at("chain").get<std::string>();
    bind_atoms(parse_chain_expr(*ws.chain), ws.env);
  }
  return ws;
}

Workspace load_workspace(const std::filesystem::path& path) {
  return parse_workspace(read_file(path));
}

Json to_json(const Multigraph& g) {
  Json out = Json::object();
  Json nodes = Json::array();
  for (auto n : g.nodes()) nodes.push_back(n.value);
  out["nodes"] = std::move(nodes);
  // Runs of equal colour collapse into one record; the copy order survives.
  Json edges = Json::array();
  for (const auto& [key, copies] : g.edges()) {
    for (std::size_t i = 0; i < copies.size();) {
      std::size_t j = i;
      while (j < copies.size() && copies[j] == copies[i]) ++j;
      edges.push_back({{"u", key.lo.value}, {"v", key.hi.value}, {"color", copies[i].name},
                       {"mult", j - i}});
      i = j;
    }
  }
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const BettiVector& b) { return Json(b.values); }

Json to_json(const Multicomplex& x) {
  Json out = Json::object();
  Json palette = Json::array();
  for (const auto& c : x.palette()) palette.push_back(c.name);
  out["palette"] = std::move(palette);
  out["policy"] = to_string(x.policy());
  out["dimension"] = x.dimension();
  Json dims = Json::array();
  for (int d = 0; d <= x.dimension(); ++d) {
    Json cells = Json::array();
    for (const auto& c : x.cells(static_cast<std::size_t>(d))) {
      Json cell = cell_ref(c.id);
      Json faces = Json::array();
      for (const auto& f : c.faces) faces.push_back(cell_ref(f));
      cell["faces"] = std::move(faces);
      Json colors = Json::array();
      if (d > 0) {
        for (const auto& col : cell_coloring(x, c.id)) colors.push_back(col.name);
      }
      cell["colors"] = std::move(colors);
      cells.push_back(std::move(cell));
    }
    dims.push_back(std::move(cells));
  }
  out["cells"] = std::move(dims);
  return out;
}

Json to_json(const FiltrationPoset& p) {
  Json out = Json::object();
  out["mode"] = p.mode == FiltrationMode::FixedOrder ? "fixed-order" : "identify-permutations";
  out["atoms"] = p.atom_count;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& n = p.nodes[i];
    nodes.push_back({{"delta", i},
                     {"level", n.level},
                     {"chain", to_string(n.chain)},
                     {"betti", to_json(n.betti)},
                     {"cells", n.complex.total_cells()}});
  }
  out["nodes"] = std::move(nodes);
  Json covers = Json::array();
  for (const auto& c : p.covers) {
    covers.push_back({{"from", c.from}, {"to", c.to}, {"f", c.f_index}});
  }
  out["covers"] = std::move(covers);
  const auto r = level_report(p);
  out["levels"] = {{"formula", r.formula_level_sizes},
                   {"measured", r.measured_level_sizes},
                   {"folds_formula", r.formula_folds},
                   {"folds_measured", r.measured_folds}};
  return out;
}

Json to_json(const IncrementalParams& p) {
  return {{"d", p.dimension}, {"beta_g", p.beta_g}, {"beta_h", p.beta_h},
          {"n_g", p.n_g},     {"n_h", p.n_h},       {"p_g", p.p_g},
          {"p_h", p.p_h},     {"cl", p.cl},         {"dup", p.dup}};
}

Json to_json(const IncrementalReport& r) {
  return {{"params", {to_json(r.params1), to_json(r.params2)}},
          {"formula", {{"beta1", r.formula_beta1}, {"beta2", r.formula_beta2}}},
          {"oracle", {{"beta1", r.oracle_beta1}, {"beta2", r.oracle_beta2}}},
          {"agrees", {{"beta1", r.agrees1}, {"beta2", r.agrees2}}}};
}

std::string to_string(CellPolicy policy) {
  return policy == CellPolicy::Canonical ? "canonical" : "per-combination";
}

CellPolicy parse_policy(const std::string& name) {
  if (name == "canonical") return CellPolicy::Canonical;
  if (name == "per-combination") return CellPolicy::PerCombination;
  schema_error("unknown cell policy \"" + name + "\"");
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace mlat
