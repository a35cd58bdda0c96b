#include <random>

#include "doctest.h"
#include "mlat/incremental.hpp"
#include "mlat/random.hpp"
#include "support.hpp"

using namespace mlat;

TEST_CASE("single-cell updates") {
  BettiVector b;
  b = incremental_step(b, 0, true);
  b = incremental_step(b, 0, true);
  CHECK(b.values == std::vector<std::size_t>{2});
  b = incremental_step(b, 1, false);
  CHECK(b.values == std::vector<std::size_t>{1, 0});
  b = incremental_step(b, 1, true);
  CHECK(b.values == std::vector<std::size_t>{1, 1});
  b = incremental_step(b, 2, false);
  CHECK(b.values == std::vector<std::size_t>{1, 0, 0});
  CHECK(support::kind_of([&] { incremental_step(b, 2, false); }) == ErrorKind::NegativeBetti);
  CHECK(support::kind_of([] { incremental_step(BettiVector{}, 1, false); }) ==
        ErrorKind::NegativeBetti);
}

TEST_CASE("replay rejects cells out of order or repeated") {
  const auto x = clique_multicomplex(support::complete({1, 2, 3}));
  CellReplay replay(x);
  CHECK(support::kind_of([&] { replay.add(x.cells(1)[0].id); }) == ErrorKind::MalformedComplex);
  replay.add(x.cells(0)[0].id);
  CHECK(support::kind_of([&] { replay.add(x.cells(0)[0].id); }) == ErrorKind::MalformedComplex);
}

TEST_CASE("replaying in any valid order reaches the direct Betti vector") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 80; ++i) {
    const auto x = clique_multicomplex(random_multigraph(rng));
    const auto expected = betti(x);
    CHECK(replay_betti(x, canonical_order(x)) == expected);
    CHECK(replay_betti(x, random_valid_order(x, rng)) == expected);
  }
}

TEST_CASE("parameters for closing a triangle") {
  const auto g = support::path({1, 2, 3});
  const auto h = support::graph({1, 3}, {{1, 3, "black", 1}});
  const auto p1 = extract_params(g, h, 1);
  CHECK(p1.n_g == 1);
  CHECK(p1.p_g == 1);
  CHECK(p1.n_h == 1);
  CHECK(p1.p_h == 0);
  CHECK(p1.cl == 1);
  CHECK(p1.dup == 0);
  const auto r = validate(g, h);
  CHECK(r.formula_beta1 == 0);
  CHECK(r.oracle_beta1 == 0);
  CHECK(r.agrees1);
  CHECK(r.agrees2);
}

TEST_CASE("duplications created by the merge are counted") {
  const auto g = support::complete({1, 2, 3});
  const auto p2 = extract_params(g, g, 2);
  // Doubling every edge of a triangle turns 1 filled face into 8.
  CHECK(p2.dup == 7);
  const auto p1 = extract_params(g, g, 1);
  CHECK(p1.dup == 3);
}

TEST_CASE("empty operands give all zeros") {
  const Multigraph empty;
  const auto r = validate(empty, empty);
  CHECK(r.params1 == IncrementalParams{1});
  CHECK(r.formula_beta1 == 0);
  CHECK(r.formula_beta2 == 0);
  CHECK(r.oracle_beta1 == 0);
  CHECK(r.oracle_beta2 == 0);
}

TEST_CASE("reference parameter sets") {
  const auto findings = check_reference_cases();
  REQUIRE(findings.size() == 6);
  auto find = [&](const std::string& name, std::size_t d) {
    for (const auto& f : findings) {
      if (f.name == name && f.dimension == d) return f;
    }
    FAIL("missing case");
    return FormulaFinding{};
  };
  CHECK(find("A", 1).formula == 0);
  CHECK(find("A", 1).discrepancy);
  CHECK(find("B", 1).formula == 2);
  CHECK(find("B", 1).discrepancy);
  CHECK_FALSE(find("A", 2).discrepancy);
  CHECK_FALSE(find("B", 2).discrepancy);
  CHECK_FALSE(find("C", 1).discrepancy);
  CHECK_FALSE(find("C", 2).discrepancy);
}
