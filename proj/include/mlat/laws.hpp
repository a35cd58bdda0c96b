#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mlat/chain.hpp"
#include "mlat/multicomplex.hpp"

namespace mlat {

struct LawViolation {
  std::string law;
  std::string witness;
};

/// The lattice operations under test. Defaults are the library's own; tests
/// swap one out to check that a broken operation is caught.
struct LatticeOps {
  std::function<bool(const ChainExpr&, const ChainExpr&)> leq = mlat::leq;
  std::function<ChainExpr(const ChainExpr&, const ChainExpr&)> meet = mlat::meet;
  std::function<ChainExpr(const ChainExpr&, const ChainExpr&)> join = mlat::join;
  std::function<ChainExpr(const ChainExpr&)> complement = mlat::complement;
  std::function<std::optional<ChainExpr>(const ChainExpr&, const ChainExpr&)> plus = mlat::plus;
  std::function<ChainExpr(std::size_t, const ChainExpr&)> apply_f = mlat::apply_f;
};

/// Exhaustive check over the 2^(k-1) chains on a fixed atom order: partial
/// order, bounds, absorption, distributivity, complements, the f_j maps and
/// the partial monoid.
std::vector<LawViolation> check_lattice_laws(const std::vector<std::string>& atoms,
                                             const LatticeOps& ops = {});

/// Associativity, commutativity and unit of `complex_merge` on the given
/// graphs, plus agreement with merging the graphs first.
std::vector<LawViolation> check_monoidal_laws(const Multigraph& a, const Multigraph& b,
                                              const Multigraph& c,
                                              CellPolicy policy = CellPolicy::Canonical);

}  // namespace mlat
