#include <set>

#include "doctest.h"
#include "mlat/chain_parser.hpp"
#include "mlat/filtration.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mlat;

namespace {

ChainExpr parse(const char* src) { return parse_chain_expr(src); }

/// k connected atoms that all pass through node 1.
ChainEnv star_env(std::size_t k) {
  ChainEnv env;
  env.palette = support::palette();
  for (std::size_t i = 0; i < k; ++i) {
    const auto leaf = static_cast<std::uint32_t>(10 + i);
    env.graphs.emplace("G" + std::to_string(i + 1), support::path({1, leaf, leaf + 100}));
  }
  return env;
}

}  // namespace

TEST_CASE("chain enumeration matches the brute-force key set") {
  const std::vector<std::size_t> ordered_partitions{1, 3, 13, 75};
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto atoms = default_atoms(k);
    const auto chains = enumerate_chains(atoms, true);
    CHECK(chains.size() == ordered_partitions[k - 1]);
    std::set<oracle::ChainKey> keys;
    for (const auto& x : chains) keys.insert(oracle::key_of(x));
    CHECK(keys.size() == chains.size());
    CHECK(keys == oracle::all_chain_keys(atoms));
    CHECK(enumerate_chains(atoms, false).size() == (std::size_t{1} << (k - 1)));
    for (std::size_t i = 1; i < chains.size(); ++i) {
      CHECK(chains[i - 1].merge_count() <= chains[i].merge_count());
    }
  }
}

TEST_CASE("order up to merge order") {
  CHECK(leq_up_to_merge_order(parse("G | H | K"), parse("H . G | K")));
  CHECK(leq_up_to_merge_order(parse("G | H | K"), parse("G . H . K")));
  CHECK_FALSE(leq_up_to_merge_order(parse("G | H | K"), parse("G . K | H")));
  CHECK_FALSE(leq_up_to_merge_order(parse("G . H | K"), parse("G | H . K")));
}

TEST_CASE("identified filtration levels are set partitions") {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto env = star_env(k);
    const auto p = build_filtration(bottom(default_atoms(k)), env);
    const auto counts = oracle::partition_counts(default_atoms(k));
    const auto report = level_report(p);
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(report.measured_level_sizes[j] == counts.at(k - j));
      CHECK(level(p, j).size() == counts.at(k - j));
      for (const auto* node : level(p, j)) CHECK(node->betti.at(0) == k - j);
    }
    CHECK(p.nodes.front().level == 0);
    CHECK(p.nodes.back().level == k - 1);
    CHECK(support::kind_of([&] { level(p, k); }) == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("fixed-order filtration is the f_j closure") {
  const auto env = star_env(4);
  const auto p = build_filtration(bottom(default_atoms(4)), env, FiltrationMode::FixedOrder);
  CHECK(p.nodes.size() == 8);
  CHECK(p.covers.size() == 12);
  for (const auto& c : p.covers) {
    CHECK(apply_f(c.f_index, p.nodes[c.from].chain) == p.nodes[c.to].chain);
    CHECK(p.nodes[c.to].level == p.nodes[c.from].level + 1);
  }
  for (std::size_t i = 1; i < p.nodes.size(); ++i) {
    CHECK(p.nodes[i - 1].level <= p.nodes[i].level);
  }
}

TEST_CASE("equal evaluated blocks are identified") {
  ChainEnv env;
  env.palette = support::palette();
  env.graphs.emplace("A", support::path({1, 2}));
  env.graphs.emplace("B", support::path({1, 2}));
  env.graphs.emplace("C", support::path({5, 6}));
  const auto p = build_filtration(parse("A | B | C"), env);
  // A.B|C and its twin differ; A.C|B and B.C|A evaluate alike.
  CHECK(level_report(p).measured_level_sizes == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("reports and exports") {
  const auto env = star_env(3);
  const auto p = build_filtration(bottom(default_atoms(3)), env);
  const auto r = level_report(p);
  CHECK(r.formula_level_sizes == std::vector<std::size_t>{3, 3, 1});
  CHECK(r.measured_level_sizes == std::vector<std::size_t>{1, 3, 1});
  CHECK(r.formula_folds == 5);
  CHECK(r.measured_folds == 5);
  const auto text = to_string(r);
  CHECK(text.find("formula") != std::string::npos);
  CHECK(text.find("measured") != std::string::npos);

  const auto dot = to_dot(p);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("G1 ⊗ G2 ⊗ G3 | β = (3, 0)") != std::string::npos);
  CHECK(dot.find("label=\"f_1\"") != std::string::npos);

  const auto trace = betti_trace(p, 0);
  REQUIRE(trace.size() == 5);
  CHECK(trace.front().beta == 3);
  CHECK(trace.back().beta == 1);
  CHECK(betti_along(p, {0, 4}, 0) == std::vector<std::size_t>{3, 1});
}

TEST_CASE("single atom filtration") {
  const auto env = star_env(1);
  const auto p = build_filtration(bottom(default_atoms(1)), env, FiltrationMode::FixedOrder);
  CHECK(p.nodes.size() == 1);
  CHECK(p.covers.empty());
}
