#include <random>

#include "doctest.h"
#include "mlat/gf2.hpp"
#include "mlat/homology.hpp"
#include "mlat/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mlat;

namespace {

Multicomplex pillow() {
  auto ref = [](std::vector<std::uint32_t> vs, std::uint32_t copy) {
    CellRef r;
    for (auto v : vs) r.vertices.emplace_back(v);
    r.copy = copy;
    return r;
  };
  std::vector<Multicell> vertices{{ref({1}, 1), {}, std::nullopt},
                                  {ref({2}, 1), {}, std::nullopt},
                                  {ref({3}, 1), {}, std::nullopt}};
  std::vector<Multicell> edges{{ref({1, 2}, 1), {ref({1}, 1), ref({2}, 1)}, ColorId{"red"}},
                               {ref({1, 3}, 1), {ref({1}, 1), ref({3}, 1)}, ColorId{"red"}},
                               {ref({2, 3}, 1), {ref({2}, 1), ref({3}, 1)}, ColorId{"black"}}};
  const std::vector<CellRef> rim{ref({1, 2}, 1), ref({1, 3}, 1), ref({2, 3}, 1)};
  std::vector<Multicell> faces{{ref({1, 2, 3}, 1), rim, std::nullopt},
                               {ref({1, 2, 3}, 2), rim, std::nullopt}};
  return Multicomplex(support::palette(), {vertices, edges, faces});
}

}  // namespace

TEST_CASE("GF(2) rank agrees with span enumeration") {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution bit(0.4);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = dim(rng);
    const auto cols = dim(rng);
    Gf2Matrix m(rows, cols);
    oracle::DenseMatrix dense(rows, std::vector<int>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (bit(rng)) {
          m.set(r, c);
          dense[r][c] = 1;
        }
      }
    }
    CHECK(gf2_rank(m) == oracle::span_rank(dense, cols));
  }
}

TEST_CASE("GF(2) column basis and products") {
  Gf2ColumnBasis basis(3);
  BitVector a(3), b(3);
  a.set(0);
  a.set(1);
  b.set(1);
  CHECK(basis.insert(a));
  CHECK(basis.insert(b));
  BitVector c = a;
  c ^= b;
  CHECK(basis.contains(c));
  CHECK_FALSE(basis.insert(c));
  CHECK(basis.rank() == 2);
  const auto id = Gf2Matrix::identity(4);
  CHECK(id * id == id);
  CHECK(gf2_rank(id) == 4);
}

TEST_CASE("small complexes") {
  CHECK(betti(clique_multicomplex(support::complete({1, 2, 3}))).values ==
        std::vector<std::size_t>{1, 0, 0});
  CHECK(betti(clique_multicomplex(support::cycle({1, 2, 3}))).values ==
        std::vector<std::size_t>{1, 0, 0});
  CHECK(betti(support::skeleton_complex(support::cycle({1, 2, 3}))).values ==
        std::vector<std::size_t>{1, 1});
  CHECK(betti(clique_multicomplex(support::cycle({1, 2, 3, 4}))).values ==
        std::vector<std::size_t>{1, 1});
  CHECK(betti(clique_multicomplex(support::graph({1, 2, 3, 4}, {{1, 2, "red", 1}, {3, 4, "red", 1}})))
            .at(0) == 2);
  CHECK(betti(clique_multicomplex(support::graph({7}, {}))).values == std::vector<std::size_t>{1});
  CHECK(betti(Multicomplex{}).values.empty());
  // A doubled edge is a 1-cycle.
  CHECK(betti(clique_multicomplex(support::graph({1, 2}, {{1, 2, "red", 2}}))).values ==
        std::vector<std::size_t>{1, 1});
}

TEST_CASE("the pillow has a two-dimensional hole") {
  const auto x = pillow();
  const auto d2 = boundary_matrix(x, 2);
  REQUIRE(d2.rows() == 3);
  REQUIRE(d2.cols() == 2);
  CHECK(d2.column(0) == d2.column(1));
  CHECK(gf2_rank(d2) == 1);
  CHECK(betti(x).values == std::vector<std::size_t>{1, 0, 1});
  CHECK(duplications(x, 2) == 1);
  CHECK(support::kind_of([&] { boundary_matrix(x, 0); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("two hollow squares sharing an edge") {
  auto g = support::graph({1, 2, 3, 4, 5, 6}, {{1, 2, "red", 1},
                                              {2, 3, "red", 1},
                                              {3, 4, "black", 1},
                                              {4, 1, "red", 1},
                                              {2, 5, "black", 1},
                                              {5, 6, "red", 1},
                                              {6, 3, "black", 1}});
  CHECK(betti(clique_multicomplex(g)).values == std::vector<std::size_t>{1, 2});
}

TEST_CASE("betti agrees with dense elimination and component search") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    const auto g = random_multigraph(rng);
    const auto x = clique_multicomplex(g);
    const auto b = betti(x);
    INFO(to_string(g));
    CHECK(b.values == oracle::dense_betti(x));
    CHECK(b.at(0) == oracle::components(g));
    CHECK(connected_components(g) == oracle::components(g));
    CHECK(boundaries_compose_to_zero(x));
    CHECK(euler_characteristic(x) == euler_characteristic(b));
  }
}

TEST_CASE("Betti vectors print as tuples") {
  CHECK(to_string(BettiVector{{1, 0, 1}}) == "(1, 0, 1)");
  CHECK(to_string(BettiVector{}) == "()");
}
