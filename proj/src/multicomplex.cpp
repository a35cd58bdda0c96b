#include "mlat/multicomplex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mlat/error.hpp"

namespace mlat {

namespace {

std::string describe(const CellRef& r) {
  std::ostringstream os;
  os << "({";
  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    os << (i ? "," : "") << r.vertices[i].value;
  }
  os << "}," << r.copy << ")";
  return os.str();
}

std::vector<NodeId> without(const std::vector<NodeId>& vs, std::size_t drop) {
  std::vector<NodeId> out;
  out.reserve(vs.size() - 1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i != drop) out.push_back(vs[i]);
  }
  return out;
}

}  // namespace

Multicomplex::Multicomplex(Palette palette, std::vector<std::vector<Multicell>> cells_by_dim,
                           CellPolicy policy)
    : palette_(std::move(palette)), cells_(std::move(cells_by_dim)), policy_(policy) {
  while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
  index_.resize(cells_.size());
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    auto& layer = cells_[d];
    std::sort(layer.begin(), layer.end(),
              [](const Multicell& a, const Multicell& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < layer.size(); ++i) {
      auto& c = layer[i];
      if (c.id.vertices.size() != d + 1) {
        throw Error(ErrorKind::MalformedComplex, describe(c.id) + " filed under dimension " +
                                                     std::to_string(d));
      }
      if (!index_[d].emplace(c.id, i).second) {
        throw Error(ErrorKind::MalformedComplex, "duplicate cell " + describe(c.id));
      }
      std::sort(c.faces.begin(), c.faces.end());
      if (d > 0 && c.faces.size() != d + 1) {
        throw Error(ErrorKind::MalformedComplex, describe(c.id) + " has " +
                                                     std::to_string(c.faces.size()) + " faces");
      }
      if (d == 1 && (!c.color || !palette_.contains(*c.color))) {
        throw Error(ErrorKind::PaletteMismatch, describe(c.id) + " lacks a palette colour");
      }
    }
  }
  // Face closure: every glued face must exist one dimension down.
  for (std::size_t d = 1; d < cells_.size(); ++d) {
    for (const auto& c : cells_[d]) {
      for (const auto& f : c.faces) {
        if (f.vertices.size() != d || !index_[d - 1].contains(f)) {
          throw Error(ErrorKind::MalformedComplex,
                      describe(c.id) + " glued to missing face " + describe(f));
        }
      }
    }
  }
}

std::span<const Multicell> Multicomplex::cells(std::size_t d) const noexcept {
  if (d >= cells_.size()) return {};
  return cells_[d];
}

std::size_t Multicomplex::total_cells() const noexcept {
  std::size_t n = 0;
  for (const auto& layer : cells_) n += layer.size();
  return n;
}

std::optional<std::size_t> Multicomplex::index_of(const CellRef& ref) const {
  if (ref.vertices.empty()) return std::nullopt;
  const auto d = ref.dimension();
  if (d >= index_.size()) return std::nullopt;
  auto it = index_[d].find(ref);
  if (it == index_[d].end()) return std::nullopt;
  return it->second;
}

const Multicell& Multicomplex::at(const CellRef& ref) const {
  auto i = index_of(ref);
  if (!i) throw Error(ErrorKind::MalformedComplex, "no cell " + describe(ref));
  return cells_[ref.dimension()][*i];
}

Multicomplex clique_multicomplex(const Multigraph& g, CellPolicy policy) {
  std::map<NodeId, std::set<NodeId>> adjacent;
  for (const auto& [key, copies] : g.edges()) {
    adjacent[key.lo].insert(key.hi);
    adjacent[key.hi].insert(key.lo);
  }

  std::vector<std::vector<Multicell>> cells(1);
  for (auto v : g.nodes()) cells[0].push_back(Multicell{CellRef{{v}, 1}, {}, std::nullopt});
  if (g.edges().empty()) return Multicomplex(g.palette(), std::move(cells), policy);

  cells.emplace_back();
  for (const auto& e : g.edge_copies()) {
    cells[1].push_back(Multicell{CellRef{{e.endpoints.lo, e.endpoints.hi}, e.copy},
                                 {CellRef{{e.endpoints.lo}, 1}, CellRef{{e.endpoints.hi}, 1}},
                                 e.color});
  }

  // Grow cliques one vertex at a time, always appending a larger label so
  // each clique is produced once, already sorted.
  std::vector<std::vector<NodeId>> cliques;
  for (const auto& [key, copies] : g.edges()) cliques.push_back({key.lo, key.hi});

  for (std::size_t dim = 2; !cliques.empty(); ++dim) {
    std::vector<std::vector<NodeId>> grown;
    for (const auto& q : cliques) {
      const auto& tail = adjacent[q.back()];
      for (auto it = tail.upper_bound(q.back()); it != tail.end(); ++it) {
        const bool all = std::all_of(q.begin(), q.end() - 1,
                                     [&](NodeId u) { return adjacent[u].contains(*it); });
        if (all) {
          auto next = q;
          next.push_back(*it);
          grown.push_back(std::move(next));
        }
      }
    }
    cliques = std::move(grown);
    if (cliques.empty()) break;

    const bool one_per_clique = policy == CellPolicy::Canonical && dim >= 3;
    cells.emplace_back();
    for (const auto& q : cliques) {
      // Edges of the clique in lexicographic order; an assignment picks one
      // copy per edge and is numbered in mixed radix, first edge most
      // significant.
      std::vector<EdgeKey> edges;
      for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = i + 1; j < q.size(); ++j) edges.emplace_back(q[i], q[j]);
      }
      std::vector<std::uint32_t> radix;
      for (const auto& e : edges) radix.push_back(g.multiplicity(e));

      std::vector<std::uint32_t> pick(edges.size(), 1);
      std::uint32_t copy = 1;
      while (true) {
        Multicell cell{CellRef{q, copy}, {}, std::nullopt};
        for (std::size_t drop = 0; drop < q.size(); ++drop) {
          std::vector<std::uint32_t> face_pick;
          std::vector<std::uint32_t> face_radix;
          for (std::size_t k = 0; k < edges.size(); ++k) {
            if (edges[k].lo != q[drop] && edges[k].hi != q[drop]) {
              face_pick.push_back(pick[k]);
              face_radix.push_back(radix[k]);
            }
          }
          std::uint32_t face_copy = 1;
          if (dim - 1 == 1) {
            face_copy = face_pick.front();
          } else if (!(policy == CellPolicy::Canonical && dim - 1 >= 3)) {
            std::uint32_t idx = 0;
            for (std::size_t k = 0; k < face_pick.size(); ++k) {
              idx = idx * face_radix[k] + (face_pick[k] - 1);
            }
            face_copy = idx + 1;
          }
          cell.faces.push_back(CellRef{without(q, drop), face_copy});
        }
        cells.back().push_back(std::move(cell));

        if (one_per_clique) break;
        std::size_t k = edges.size();
        while (k > 0 && pick[k - 1] == radix[k - 1]) {
          pick[k - 1] = 1;
          --k;
        }
        if (k == 0) break;
        ++pick[k - 1];
        ++copy;
      }
    }
  }
  return Multicomplex(g.palette(), std::move(cells), policy);
}

std::vector<ColorId> cell_coloring(const Multicomplex& x, const CellRef& ref) {
  const auto& cell = x.at(ref);
  if (cell.dimension() == 0) return {};
  if (cell.dimension() == 1) return {*cell.color};

  std::set<CellRef> frontier(cell.faces.begin(), cell.faces.end());
  while (frontier.begin()->dimension() > 1) {
    std::set<CellRef> next;
    for (const auto& f : frontier) {
      const auto& fc = x.at(f);
      next.insert(fc.faces.begin(), fc.faces.end());
    }
    frontier = std::move(next);
  }
  std::vector<ColorId> out;
  for (const auto& e : frontier) out.push_back(*x.at(e).color);
  return out;
}

Multigraph one_skeleton(const Multicomplex& x) {
  std::set<NodeId> nodes;
  for (const auto& c : x.cells(0)) nodes.insert(c.id.vertices.front());
  std::map<EdgeKey, std::vector<ColorId>> edges;
  for (const auto& c : x.cells(1)) {
    edges[EdgeKey{c.id.vertices[0], c.id.vertices[1]}].push_back(*c.color);
  }
  return Multigraph(x.palette(), std::move(nodes), std::move(edges));
}

Multicomplex complex_merge(const Multicomplex& a, const Multicomplex& b) {
  const CellPolicy policy = a.empty() ? b.policy() : a.policy();
  return clique_multicomplex(merge(one_skeleton(a), one_skeleton(b)), policy);
}

Multicomplex braid(const Multicomplex& merged, const Multicomplex& a) {
  const auto from_a = one_skeleton(a);
  const auto skeleton = one_skeleton(merged);
  auto edges = skeleton.edges();
  for (auto& [key, copies] : edges) {
    const auto m = std::min<std::size_t>(from_a.multiplicity(key), copies.size());
    std::rotate(copies.begin(), copies.begin() + static_cast<std::ptrdiff_t>(m), copies.end());
  }
  return clique_multicomplex(Multigraph(skeleton.palette(), skeleton.nodes(), std::move(edges)),
                             merged.policy());
}

std::size_t duplications(const Multicomplex& x, std::size_t d) {
  std::size_t dup = 0;
  const auto layer = x.cells(d);
  for (std::size_t i = 1; i < layer.size(); ++i) {
    if (layer[i].id.vertices == layer[i - 1].id.vertices) ++dup;
  }
  return dup;
}

std::vector<std::string> gluing_violations(const Multicomplex& x) {
  std::vector<std::string> out;
  for (int d = 2; d <= x.dimension(); ++d) {
    for (const auto& cell : x.cells(static_cast<std::size_t>(d))) {
      for (std::size_t i = 0; i < cell.faces.size(); ++i) {
        for (std::size_t j = i + 1; j < cell.faces.size(); ++j) {
          const auto& s = x.at(cell.faces[i]);
          const auto& r = x.at(cell.faces[j]);
          std::vector<NodeId> meet;
          std::set_intersection(s.id.vertices.begin(), s.id.vertices.end(),
                                r.id.vertices.begin(), r.id.vertices.end(),
                                std::back_inserter(meet));
          auto glued = [&](const Multicell& face) -> std::optional<CellRef> {
            for (const auto& f : face.faces) {
              if (f.vertices == meet) return f;
            }
            return std::nullopt;
          };
          auto gs = glued(s);
          auto gr = glued(r);
          if (!gs || !gr || *gs != *gr) {
            out.push_back(describe(cell.id) + ": faces " + describe(s.id) + " and " +
                          describe(r.id) + " disagree on their common face");
          }
        }
      }
    }
  }
  return out;
}

Multicomplex juxtapose(std::span<const Multicomplex> blocks) {
  std::uint32_t max_label = 0;
  Palette palette;
  CellPolicy policy = CellPolicy::Canonical;
  for (const auto& b : blocks) {
    for (const auto& c : b.cells(0)) max_label = std::max(max_label, c.id.vertices.front().value);
    palette.insert(b.palette().begin(), b.palette().end());
    if (!b.empty()) policy = b.policy();
  }
  const std::uint32_t stride = max_label + 1;

  auto shift = [](CellRef r, std::uint32_t offset) {
    for (auto& v : r.vertices) v = NodeId{v.value + offset};
    return r;
  };

  std::vector<std::vector<Multicell>> cells;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto offset = static_cast<std::uint32_t>(i) * stride;
    const auto& b = blocks[i];
    for (int d = 0; d <= b.dimension(); ++d) {
      if (cells.size() <= static_cast<std::size_t>(d)) cells.resize(static_cast<std::size_t>(d) + 1);
      for (const auto& c : b.cells(static_cast<std::size_t>(d))) {
        Multicell moved{shift(c.id, offset), {}, c.color};
        for (const auto& f : c.faces) moved.faces.push_back(shift(f, offset));
        cells[static_cast<std::size_t>(d)].push_back(std::move(moved));
      }
    }
  }
  return Multicomplex(std::move(palette), std::move(cells), policy);
}

}  // namespace mlat
