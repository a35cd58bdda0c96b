#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mlat/multicomplex.hpp"
#include "mlat/multigraph.hpp"

namespace mlat {

struct RandomGraphOptions {
  std::uint32_t max_nodes = 10;
  std::uint32_t max_multiplicity = 3;
  double edge_probability = 0.5;
  std::vector<std::string> colors{"red", "black"};
};

/// Nodes are 1..n with n drawn from [1, max_nodes], so graphs from the same
/// generator share a node universe and overlap when merged.
Multigraph random_multigraph(std::mt19937_64& rng, const RandomGraphOptions& opts = {});

/// A uniformly shuffled order of the cells of `x` in which every cell still
/// follows all of its faces.
std::vector<CellRef> random_valid_order(const Multicomplex& x, std::mt19937_64& rng);

}  // namespace mlat
