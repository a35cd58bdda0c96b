#include <sstream>

#include "doctest.h"
#include "mlat/commands.hpp"
#include "support.hpp"

using namespace mlat;

namespace {

Workspace three_components() {
  return parse_workspace(Json::parse(R"({
    "colors": ["red", "black"],
    "graphs": {
      "G1": {"nodes": [1, 2, 3], "edges": [{"u": 1, "v": 2, "color": "red"}, {"u": 2, "v": 3, "color": "black"}]},
      "G2": {"nodes": [3, 4], "edges": [{"u": 3, "v": 4, "color": "red", "mult": 2}]},
      "G3": {"nodes": [4, 5, 6], "edges": [{"u": 4, "v": 5, "color": "black"}, {"u": 5, "v": 6, "color": "red"}]}
    },
    "chain": "G1 | G2 | G3"
  })"));
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("workspace schema errors") {
  CHECK(support::kind_of([] { parse_workspace(Json::parse("[]")); }) == ErrorKind::Schema);
  CHECK(support::kind_of([] { parse_workspace(Json::parse(R"({"graphs": {}})")); }) ==
        ErrorKind::Schema);
  CHECK(support::kind_of([] {
          parse_workspace(Json::parse(R"({"colors": ["red"], "graphs": {"G": {"nodes": [1, 2],
              "edges": [{"u": 1, "v": 2, "color": "blue"}]}}})"));
        }) == ErrorKind::PaletteMismatch);
  CHECK(support::kind_of([] {
          parse_workspace(Json::parse(R"({"colors": ["red"], "graphs": {"G": {"nodes": [1, 2],
              "edges": [{"u": 1, "v": 2, "color": "red", "mult": 0}]}}})"));
        }) == ErrorKind::InvalidMultiplicity);
  CHECK(support::kind_of([] {
          parse_workspace(
              Json::parse(R"({"colors": [], "graphs": {"G": {"nodes": [1]}}, "chain": "G | X"})"));
        }) == ErrorKind::UnknownAtom);
}

TEST_CASE("graph JSON round-trips") {
  const auto ws = three_components();
  const auto& g = ws.env.lookup("G2");
  const auto back = parse_workspace(Json{{"colors", {"red", "black"}}, {"graphs", {{"X", to_json(g)}}}});
  CHECK(back.env.lookup("X") == g);
}

TEST_CASE("complex JSON round-trips") {
  const auto x = clique_multicomplex(support::graph({1, 2, 3}, {{1, 2, "red", 2}, {1, 3, "black", 1},
                                                               {2, 3, "red", 1}}));
  CHECK(complex_from_json(to_json(x)) == x);
}

TEST_CASE("betti command") {
  const auto ws = three_components();
  std::ostringstream out;
  CHECK(cmd_betti(ws, std::nullopt, {}, out) == exit_code::ok);
  CHECK(out.str().find("beta:  (3, 1)") != std::string::npos);

  const auto single = parse_workspace(Json::parse(R"({"colors": [], "graphs": {"V": {"nodes": [4]}}})"));
  std::ostringstream json;
  CommandOptions opts;
  opts.json = true;
  cmd_betti(single, std::nullopt, opts, json);
  CHECK(Json::parse(json.str())["betti"] == Json::array({1}));
}

TEST_CASE("filtrate command") {
  const auto ws = three_components();
  CommandOptions dot;
  dot.dot = true;
  std::ostringstream identified;
  cmd_filtrate(ws, std::nullopt, false, dot, identified);
  CHECK(count(identified.str(), "[label=\"G") == 5);

  std::ostringstream fixed;
  CommandOptions json;
  json.json = true;
  cmd_filtrate(ws, std::nullopt, true, json, fixed);
  const auto doc = Json::parse(fixed.str());
  std::vector<std::size_t> beta0;
  for (const auto& n : doc["nodes"]) beta0.push_back(n["betti"][0].get<std::size_t>());
  CHECK(beta0 == std::vector<std::size_t>{3, 2, 2, 1});

  std::ostringstream one;
  cmd_filtrate(ws, std::string("G2"), false, dot, one);
  CHECK(count(one.str(), "[label=\"G") == 1);
}

TEST_CASE("parse, lattice and merge commands") {
  std::ostringstream out;
  cmd_parse("G | H . K", {}, out);
  CHECK(out.str().find("G ⊗ H ⊙ K") != std::string::npos);
  CHECK(support::kind_of([] {
          std::ostringstream sink;
          cmd_parse("G | (", {}, sink);
        }) == ErrorKind::SyntaxError);

  std::ostringstream lattice;
  cmd_lattice(default_atoms(3), {}, lattice);
  CHECK(count(lattice.str(), "complement") == 4);

  const auto ws = three_components();
  std::ostringstream merged;
  cmd_merge(ws, "G1", "G2", true, {}, merged);
  const auto doc = Json::parse(merged.str());
  CHECK(doc["cells"][1].size() == 4);
}

TEST_CASE("check-laws command") {
  const auto ws = three_components();
  std::ostringstream out;
  CHECK(cmd_check_laws(&ws, 1, {}, out) == exit_code::ok);
  CHECK(cmd_check_laws(&ws, 3, {}, out) == exit_code::ok);
  CHECK(cmd_check_laws(nullptr, 4, {}, out) == exit_code::ok);
  CHECK_THROWS_AS(cmd_check_laws(&ws, 6, {}, out), UsageError);
}

TEST_CASE("incremental and fuzz commands") {
  const auto ws = three_components();
  CommandOptions json;
  json.json = true;
  std::ostringstream out;
  cmd_incremental(ws, "G1", "G2", json, out);
  const auto doc = Json::parse(out.str());
  CHECK(doc.contains("formula"));
  CHECK(doc.contains("oracle"));
  CHECK(doc.contains("agrees"));

  std::ostringstream reference;
  cmd_reference_cases({}, reference);
  CHECK(count(reference.str(), "DISCREPANCY") == 2);

  CommandOptions seeded;
  seeded.seed = 99;
  std::ostringstream a, b, summary;
  cmd_fuzz(12, seeded, a, summary);
  cmd_fuzz(12, seeded, b, summary);
  CHECK(a.str() == b.str());
  CHECK(count(a.str(), "\n") == 12);
  const auto first = Json::parse(a.str().substr(0, a.str().find('\n')));
  CHECK(first["inputs_digest"].get<std::string>().size() == 16);
  CHECK(summary.str().find("dimension,pairs,agreements,rate") == 0);
}

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}
