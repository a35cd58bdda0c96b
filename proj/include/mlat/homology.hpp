#pragma once

#include <string>
#include <vector>

#include "mlat/gf2.hpp"
#include "mlat/multicomplex.hpp"

namespace mlat {

/// Betti numbers beta_0..beta_D of a complex of dimension D.
struct BettiVector {
  std::vector<std::size_t> values;

  std::size_t at(std::size_t d) const noexcept { return d < values.size() ? values[d] : 0; }
  std::size_t size() const noexcept { return values.size(); }

  bool operator==(const BettiVector&) const = default;
};

/// "(1, 0, 1)"
std::string to_string(const BettiVector& b);

/// Column j holds the multiboundary of the j-th d-cell over the (d-1)-cells,
/// both in canonical order. Requires d >= 1.
Gf2Matrix boundary_matrix(const Multicomplex& x, std::size_t d);

/// beta_d = #d-cells - rank(boundary d) - rank(boundary d+1).
BettiVector betti(const Multicomplex& x);

/// Components of the underlying simple graph.
std::size_t connected_components(const Multigraph& g);

/// Alternating sum of cell counts.
long euler_characteristic(const Multicomplex& x);
long euler_characteristic(const BettiVector& b);

/// True when every composite boundary(d-1) * boundary(d) vanishes.
bool boundaries_compose_to_zero(const Multicomplex& x);

}  // namespace mlat
