#include "mlat/homology.hpp"

#include <numeric>
#include <sstream>

#include "mlat/error.hpp"

namespace mlat {

std::string to_string(const BettiVector& b) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < b.values.size(); ++i) os << (i ? ", " : "") << b.values[i];
  os << ")";
  return os.str();
}

Gf2Matrix boundary_matrix(const Multicomplex& x, std::size_t d) {
  if (d == 0) throw Error(ErrorKind::IndexOutOfRange, "boundary matrices start at dimension 1");
  const auto cols = x.cells(d);
  Gf2Matrix m(x.cell_count(d - 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& face : multiboundary(cols[j])) m.flip(*x.index_of(face), j);
  }
  return m;
}

BettiVector betti(const Multicomplex& x) {
  const int top = x.dimension();
  if (top < 0) return {};
  const auto dims = static_cast<std::size_t>(top) + 1;
  // rank[d] = rank of boundary d; rank[0] and rank[dims] are zero.
  std::vector<std::size_t> rank(dims + 1, 0);
  for (std::size_t d = 1; d < dims; ++d) rank[d] = gf2_rank(boundary_matrix(x, d));
  BettiVector out;
  for (std::size_t d = 0; d < dims; ++d) {
    out.values.push_back(x.cell_count(d) - rank[d] - rank[d + 1]);
  }
  return out;
}

std::size_t connected_components(const Multigraph& g) {
  std::map<NodeId, NodeId> parent;
  for (auto v : g.nodes()) parent[v] = v;
  auto find = [&](NodeId v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t components = g.node_count();
  for (const auto& [key, copies] : g.edges()) {
    auto a = find(key.lo);
    auto b = find(key.hi);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

long euler_characteristic(const Multicomplex& x) {
  long chi = 0;
  for (int d = 0; d <= x.dimension(); ++d) {
    const auto n = static_cast<long>(x.cell_count(static_cast<std::size_t>(d)));
    chi += d % 2 == 0 ? n : -n;
  }
  return chi;
}

long euler_characteristic(const BettiVector& b) {
  long chi = 0;
  for (std::size_t d = 0; d < b.values.size(); ++d) {
    const auto n = static_cast<long>(b.values[d]);
    chi += d % 2 == 0 ? n : -n;
  }
  return chi;
}

bool boundaries_compose_to_zero(const Multicomplex& x) {
  for (int d = 2; d <= x.dimension(); ++d) {
    const auto du = static_cast<std::size_t>(d);
    if (!(boundary_matrix(x, du - 1) * boundary_matrix(x, du)).is_zero()) return false;
  }
  return true;
}

}  // namespace mlat
