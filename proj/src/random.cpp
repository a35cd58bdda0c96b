#include "mlat/random.hpp"

#include <algorithm>
#include <map>

namespace mlat {

Multigraph random_multigraph(std::mt19937_64& rng, const RandomGraphOptions& opts) {
  std::uniform_int_distribution<std::uint32_t> node_count(1, std::max(1u, opts.max_nodes));
  std::uniform_int_distribution<std::uint32_t> mult(1, std::max(1u, opts.max_multiplicity));
  std::uniform_int_distribution<std::size_t> color(0, opts.colors.size() - 1);
  std::bernoulli_distribution has_edge(opts.edge_probability);

  const auto n = node_count(rng);
  std::vector<std::uint32_t> nodes(n);
  for (std::uint32_t i = 0; i < n; ++i) nodes[i] = i + 1;

  std::vector<EdgeSpec> edges;
  for (std::uint32_t u = 1; u <= n; ++u) {
    for (std::uint32_t v = u + 1; v <= n; ++v) {
      if (!has_edge(rng)) continue;
      const auto m = mult(rng);
      for (std::uint32_t c = 0; c < m; ++c) edges.push_back({u, v, opts.colors[color(rng)], 1});
    }
  }
  return Multigraph(make_palette(opts.colors), nodes, edges);
}

std::vector<CellRef> random_valid_order(const Multicomplex& x, std::mt19937_64& rng) {
  // Kahn's algorithm with a random pick among the ready cells.
  std::map<CellRef, std::size_t> waiting;
  std::map<CellRef, std::vector<CellRef>> cofaces;
  std::vector<CellRef> ready;
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const auto& c : x.cells(static_cast<std::size_t>(d))) {
      waiting[c.id] = c.faces.size();
      for (const auto& f : c.faces) cofaces[f].push_back(c.id);
      if (c.faces.empty()) ready.push_back(c.id);
    }
  }
  std::vector<CellRef> out;
  out.reserve(waiting.size());
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const auto i = pick(rng);
    std::swap(ready[i], ready.back());
    auto cell = std::move(ready.back());
    ready.pop_back();
    if (auto it = cofaces.find(cell); it != cofaces.end()) {
      for (const auto& up : it->second) {
        if (--waiting[up] == 0) ready.push_back(up);
      }
    }
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace mlat
