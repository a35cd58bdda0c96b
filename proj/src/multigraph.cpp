#include "mlat/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mlat/error.hpp"

namespace mlat {

Palette make_palette(const std::vector<std::string>& names) {
  Palette p;
  for (const auto& n : names) p.insert(ColorId{n});
  return p;
}

Multigraph::Multigraph(Palette palette, const std::vector<std::uint32_t>& nodes,
                       const std::vector<EdgeSpec>& edges)
    : palette_(std::move(palette)) {
  for (auto n : nodes) nodes_.insert(NodeId{n});
  for (const auto& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorKind::SelfLoopPresent, "edge on node " + std::to_string(e.u));
    }
    if (e.mult < 1) {
      throw Error(ErrorKind::InvalidMultiplicity,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    auto& copies = edges_[EdgeKey{NodeId{e.u}, NodeId{e.v}}];
    copies.insert(copies.end(), e.mult, ColorId{e.color});
  }
  validate();
}

Multigraph::Multigraph(Palette palette, std::set<NodeId> nodes,
                       std::map<EdgeKey, std::vector<ColorId>> copies)
    : palette_(std::move(palette)), nodes_(std::move(nodes)), edges_(std::move(copies)) {
  validate();
}

void Multigraph::validate() const {
  for (const auto& [key, colors] : edges_) {
    if (key.lo == key.hi) {
      throw Error(ErrorKind::SelfLoopPresent, "edge on node " + std::to_string(key.lo.value));
    }
    if (colors.empty()) {
      throw Error(ErrorKind::InvalidMultiplicity, "endpoint pair with zero copies");
    }
    if (!nodes_.contains(key.lo) || !nodes_.contains(key.hi)) {
      throw Error(ErrorKind::DanglingEndpoint, "edge {" + std::to_string(key.lo.value) + "," +
                                                   std::to_string(key.hi.value) + "}");
    }
    for (const auto& c : colors) {
      if (!palette_.contains(c)) {
        throw Error(ErrorKind::PaletteMismatch, "colour '" + c.name + "' not in palette");
      }
    }
  }
}

std::uint32_t Multigraph::multiplicity(EdgeKey e) const {
  auto it = edges_.find(e);
  return it == edges_.end() ? 0u : static_cast<std::uint32_t>(it->second.size());
}

std::vector<EdgeCopy> Multigraph::edge_copies() const {
  std::vector<EdgeCopy> out;
  for (const auto& [key, colors] : edges_) {
    for (std::size_t i = 0; i < colors.size(); ++i) {
      out.push_back(EdgeCopy{key, static_cast<std::uint32_t>(i + 1), colors[i]});
    }
  }
  return out;
}

std::set<ColorId> Multigraph::colors() const {
  std::set<ColorId> out;
  for (const auto& [key, colors] : edges_) out.insert(colors.begin(), colors.end());
  return out;
}

std::size_t Multigraph::edge_copy_count() const noexcept {
  return std::accumulate(edges_.begin(), edges_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second.size(); });
}

std::size_t color_count(const Multigraph& g) { return g.colors().size(); }

Multilayer tensor(const Multigraph& g, const Multigraph& h) { return Multilayer{{g, h}}; }

Multilayer tensor(Multilayer lhs, const Multigraph& h) {
  lhs.layers.push_back(h);
  return lhs;
}

Multigraph merge(const Multigraph& g, const Multigraph& h) {
  Palette palette;
  if (g.palette().empty()) {
    palette = h.palette();
  } else if (h.palette().empty() || g.palette() == h.palette()) {
    palette = g.palette();
  } else {
    throw Error(ErrorKind::PaletteMismatch, "merge operands declare different palettes");
  }

  std::set<NodeId> nodes = g.nodes();
  nodes.insert(h.nodes().begin(), h.nodes().end());

  auto edges = g.edges();
  for (const auto& [key, colors] : h.edges()) {
    auto& copies = edges[key];
    copies.insert(copies.end(), colors.begin(), colors.end());
  }
  return Multigraph(std::move(palette), std::move(nodes), std::move(edges));
}

std::string to_string(const Multigraph& g) {
  std::ostringstream os;
  os << "V={";
  bool first = true;
  for (auto n : g.nodes()) {
    os << (first ? "" : ",") << n.value;
    first = false;
  }
  os << "} E={";
  first = true;
  for (const auto& e : g.edge_copies()) {
    os << (first ? "" : ",") << e.endpoints.lo.value << "-" << e.endpoints.hi.value << "#"
       << e.copy << ":" << e.color.name;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace mlat
