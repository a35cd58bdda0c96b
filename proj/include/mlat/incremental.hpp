#pragma once

#include <string>
#include <vector>

#include "mlat/gf2.hpp"
#include "mlat/homology.hpp"
#include "mlat/multicomplex.hpp"

namespace mlat {

/// Inputs of the merge formulas at one dimension d.
///   n_*: cells an operand adds that close a d-cycle
///   p_*: cells an operand adds that do not
///   cl:  cliques created by the merge that fill a d-cycle
///   dup: duplications created by the merge in dimension d
struct IncrementalParams {
  std::size_t dimension = 1;
  long beta_g = 0;
  long beta_h = 0;
  long n_g = 0;
  long n_h = 0;
  long p_g = 0;
  long p_h = 0;
  long cl = 0;
  long dup = 0;

  bool operator==(const IncrementalParams&) const = default;
};

/// One added d-cell: a cycle-closing cell raises beta_d, any other lowers
/// beta_(d-1). Throws NegativeBetti when that would drop below zero.
BettiVector incremental_step(BettiVector beta, std::size_t d, bool closes_cycle);

/// max(b_G, b_H) + max(n_G, n_H) - min(p_G, p_H) - cl
long formula_beta1(const IncrementalParams& p);
/// max(b_G, b_H) + max(n_G, n_H) - min(p_G, p_H) - cl + dup
long formula_beta2(const IncrementalParams& p);

/// Adds cells of a fixed ambient complex one at a time, deciding cycle
/// closure by rank and tracking Betti numbers through `incremental_step`.
class CellReplay {
 public:
  explicit CellReplay(const Multicomplex& ambient);

  /// Returns whether the cell closed a cycle. Its faces must already be in.
  bool add(const CellRef& ref);
  bool contains(const CellRef& ref) const;
  const BettiVector& betti() const noexcept { return beta_; }

 private:
  const Multicomplex* ambient_;
  std::vector<Gf2ColumnBasis> bases_;   // per dimension d >= 1, rows = (d-1)-cells
  std::vector<std::vector<bool>> present_;
  BettiVector beta_;
};

/// Cells of `x` in canonical order: dimension, vertex tuple, copy.
std::vector<CellRef> canonical_order(const Multicomplex& x);

/// Replays `order` from the empty complex and returns the final vector.
BettiVector replay_betti(const Multicomplex& x, const std::vector<CellRef>& order);

/// Derives the formula inputs for merging `g` and `h` at dimension d by
/// replaying the merged complex cell by cell. Cells whose edges are all
/// copies from one operand are attributed to it; the rest are created by
/// the merge.
IncrementalParams extract_params(const Multigraph& g, const Multigraph& h, std::size_t d,
                                 CellPolicy policy = CellPolicy::Canonical);

struct IncrementalReport {
  IncrementalParams params1;
  IncrementalParams params2;
  long formula_beta1 = 0;
  long formula_beta2 = 0;
  std::size_t oracle_beta1 = 0;
  std::size_t oracle_beta2 = 0;
  bool agrees1 = false;
  bool agrees2 = false;
};

/// Formula values next to the direct homology of the merged complex.
/// Agreement is reported, never assumed.
IncrementalReport validate(const Multigraph& g, const Multigraph& h,
                           CellPolicy policy = CellPolicy::Canonical);

/// A worked parameter assignment with the value claimed for it.
struct ReferenceCase {
  std::string name;
  IncrementalParams params;
  long stated = 0;
};

/// The six worked assignments (cases A, B, C at d = 1, 2) with their claimed values.
std::vector<ReferenceCase> reference_cases();

struct FormulaFinding {
  std::string name;
  std::size_t dimension = 0;
  long formula = 0;
  long stated = 0;
  bool discrepancy = false;
};

/// Substitutes each reference case into its formula and flags mismatches.
std::vector<FormulaFinding> check_reference_cases();

}  // namespace mlat
