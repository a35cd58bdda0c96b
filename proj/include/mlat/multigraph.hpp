#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mlat {

struct NodeId {
  std::uint32_t value = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}

  auto operator<=>(const NodeId&) const = default;
};

struct ColorId {
  std::string name;

  ColorId() = default;
  explicit ColorId(std::string n) : name(std::move(n)) {}

  auto operator<=>(const ColorId&) const = default;
};

using Palette = std::set<ColorId>;

Palette make_palette(const std::vector<std::string>& names);

/// Unordered endpoint pair, stored with `lo < hi`.
struct EdgeKey {
  NodeId lo;
  NodeId hi;

  EdgeKey() = default;
  EdgeKey(NodeId a, NodeId b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  auto operator<=>(const EdgeKey&) const = default;
};

struct EdgeCopy {
  EdgeKey endpoints;
  std::uint32_t copy = 1;  // 1-based, contiguous per endpoint pair
  ColorId color;

  auto operator<=>(const EdgeCopy&) const = default;
};

/// Ingestion record: `mult` parallel copies of one coloured edge.
struct EdgeSpec {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::string color;
  std::uint32_t mult = 1;
};

/// Edge-coloured multigraph. Immutable once constructed; copies of an endpoint
/// pair are indexed 1..m(e) in insertion order.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(Palette palette, const std::vector<std::uint32_t>& nodes,
             const std::vector<EdgeSpec>& edges);
  Multigraph(Palette palette, std::set<NodeId> nodes,
             std::map<EdgeKey, std::vector<ColorId>> copies);

  const Palette& palette() const noexcept { return palette_; }
  const std::set<NodeId>& nodes() const noexcept { return nodes_; }
  /// Endpoint pair -> colour of each copy (index i holds copy i+1).
  const std::map<EdgeKey, std::vector<ColorId>>& edges() const noexcept { return edges_; }

  std::uint32_t multiplicity(EdgeKey e) const;
  std::vector<EdgeCopy> edge_copies() const;
  std::set<ColorId> colors() const;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_copy_count() const noexcept;
  bool empty() const noexcept { return nodes_.empty(); }

  auto operator<=>(const Multigraph&) const = default;
  bool operator==(const Multigraph&) const = default;

 private:
  void validate() const;

  Palette palette_;
  std::set<NodeId> nodes_;
  std::map<EdgeKey, std::vector<ColorId>> edges_;
};

/// Number of distinct colours actually carried by edges.
std::size_t color_count(const Multigraph& g);

/// Ordered juxtaposition of layers; no interaction between them.
struct Multilayer {
  std::vector<Multigraph> layers;

  bool operator==(const Multilayer&) const = default;
};

Multilayer tensor(const Multigraph& g, const Multigraph& h);
Multilayer tensor(Multilayer lhs, const Multigraph& h);

/// Interaction merge: union of node labels, multiplicities added, copies of
/// `h` appended after those of `g`. Palettes must agree unless one operand
/// carries none (the edgeless unit).
Multigraph merge(const Multigraph& g, const Multigraph& h);

std::string to_string(const Multigraph& g);

}  // namespace mlat
