#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mlat/error.hpp"
#include "mlat/multicomplex.hpp"
#include "mlat/multigraph.hpp"

namespace support {

/// The kind of `mlat::Error` thrown by `f`, if any.
template <class F>
std::optional<mlat::ErrorKind> kind_of(F&& f) {
  try {
    f();
  } catch (const mlat::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline const mlat::Palette& palette() {
  static const auto p = mlat::make_palette({"red", "black"});
  return p;
}

inline mlat::Multigraph graph(std::vector<std::uint32_t> nodes, std::vector<mlat::EdgeSpec> edges) {
  return mlat::Multigraph(palette(), nodes, edges);
}

/// Complete simple graph on the given labels, every edge red.
inline mlat::Multigraph complete(std::vector<std::uint32_t> nodes) {
  std::vector<mlat::EdgeSpec> edges;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) edges.push_back({nodes[a], nodes[b], "red", 1});
  }
  return graph(nodes, edges);
}

/// Cycle through the labels in order, every edge black.
inline mlat::Multigraph cycle(std::vector<std::uint32_t> nodes) {
  std::vector<mlat::EdgeSpec> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    edges.push_back({nodes[i], nodes[(i + 1) % nodes.size()], "black", 1});
  }
  return graph(nodes, edges);
}

inline mlat::Multigraph path(std::vector<std::uint32_t> nodes) {
  std::vector<mlat::EdgeSpec> edges;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) edges.push_back({nodes[i], nodes[i + 1], "red", 1});
  return graph(nodes, edges);
}

/// Vertices and edge copies of `g` with no higher cells. Clique closure would
/// fill every 3-cycle, so hollow shapes are built this way.
inline mlat::Multicomplex skeleton_complex(const mlat::Multigraph& g) {
  const auto full = mlat::clique_multicomplex(g);
  std::vector<std::vector<mlat::Multicell>> cells;
  for (int d = 0; d <= std::min(full.dimension(), 1); ++d) {
    const auto layer = full.cells(static_cast<std::size_t>(d));
    cells.emplace_back(layer.begin(), layer.end());
  }
  return mlat::Multicomplex(g.palette(), std::move(cells));
}

}  // namespace support
