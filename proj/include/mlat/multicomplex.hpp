#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mlat/multigraph.hpp"

namespace mlat {

/// Identity of a multicell: its sorted vertex tuple and copy index n.
struct CellRef {
  std::vector<NodeId> vertices;
  std::uint32_t copy = 1;

  std::size_t dimension() const noexcept { return vertices.size() - 1; }

  auto operator<=>(const CellRef&) const = default;
  bool operator==(const CellRef&) const = default;
};

/// A multicell together with its gluing assignment: `faces[i]` is the copy
/// of the i-th codimension-1 face it is glued to. Faces are kept in
/// canonical order (vertex tuple, then copy).
struct Multicell {
  CellRef id;
  std::vector<CellRef> faces;
  std::optional<ColorId> color;  // set on 1-cells only

  std::size_t dimension() const noexcept { return id.dimension(); }

  bool operator==(const Multicell&) const = default;
};

/// How cells of dimension >= 3 are generated over parallel edges.
///   Canonical:       one cell per clique, glued to the copy-1 faces.
///   PerCombination:  one cell per choice of edge copies (as in dimension 2).
enum class CellPolicy { Canonical, PerCombination };

class Multicomplex {
 public:
  Multicomplex() = default;
  Multicomplex(Palette palette, std::vector<std::vector<Multicell>> cells_by_dim,
               CellPolicy policy = CellPolicy::Canonical);

  const Palette& palette() const noexcept { return palette_; }
  CellPolicy policy() const noexcept { return policy_; }

  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  bool empty() const noexcept { return cells_.empty(); }

  std::span<const Multicell> cells(std::size_t d) const noexcept;
  std::size_t cell_count(std::size_t d) const noexcept { return cells(d).size(); }
  std::size_t total_cells() const noexcept;

  std::optional<std::size_t> index_of(const CellRef& ref) const;
  const Multicell& at(const CellRef& ref) const;

  /// Same cells, gluing and colours; the generation policy is not compared.
  bool operator==(const Multicomplex& other) const {
    return palette_ == other.palette_ && cells_ == other.cells_;
  }

 private:
  Palette palette_;
  std::vector<std::vector<Multicell>> cells_;
  std::vector<std::map<CellRef, std::size_t>> index_;
  CellPolicy policy_ = CellPolicy::Canonical;
};

/// Vertices become 0-cells, edge copies 1-cells and every (d+1)-clique of
/// the underlying simple graph yields d-multicells per `policy`.
Multicomplex clique_multicomplex(const Multigraph& g, CellPolicy policy = CellPolicy::Canonical);

/// The glued faces of a multicell; empty for 0-cells.
inline std::span<const CellRef> multiboundary(const Multicell& c) noexcept { return c.faces; }

/// Colours of the cell's 1-dimensional faces in canonical order.
std::vector<ColorId> cell_coloring(const Multicomplex& x, const CellRef& ref);

/// Vertices and coloured edge copies of the complex.
Multigraph one_skeleton(const Multicomplex& x);

/// The complex of the merged 1-skeletons; new cliques are closed.
Multicomplex complex_merge(const Multicomplex& a, const Multicomplex& b);

/// The symmetry isomorphism a ⊙ b -> b ⊙ a: on every edge the copies that
/// came from `a` move behind those from the other operand.
Multicomplex braid(const Multicomplex& merged, const Multicomplex& a);

/// Sum over vertex shapes of (copies - 1) in dimension `d`.
std::size_t duplications(const Multicomplex& x, std::size_t d);

/// Gluing-consistency violations: for faces (s,p), (r,q) of one cell meeting
/// in t, the copy of t glued into (s,p) must equal the one glued into (r,q).
std::vector<std::string> gluing_violations(const Multicomplex& x);

/// Disjoint union; block i's vertex v is relabelled to i * stride + v.
Multicomplex juxtapose(std::span<const Multicomplex> blocks);

}  // namespace mlat
