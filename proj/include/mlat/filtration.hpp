#pragma once

#include <string>
#include <vector>

#include "mlat/chain.hpp"
#include "mlat/homology.hpp"
#include "mlat/multicomplex.hpp"

namespace mlat {

/// Every chain that can be written over `atoms`. With permutations, MERGE
/// blocks are unordered sets while the TENSOR order of blocks is kept
/// (ordered set partitions; 13 for k = 3). Without, the 2^(k-1) chains on
/// the given order.
std::vector<ChainExpr> enumerate_chains(const std::vector<std::string>& atoms,
                                        bool include_permutations);

/// Order on permutation-identified chains: some common atom ordering makes
/// `x` <= `y` positionwise. Equivalently every block of `y` is the union of
/// a consecutive run of blocks of `x`, in order.
bool leq_up_to_merge_order(const ChainExpr& x, const ChainExpr& y);

/// FixedOrder closes the start chain under f_j. IdentifyPermutations forgets
/// the TENSOR order as well, so any two blocks may merge; nodes with equal
/// evaluated blocks are identified.
enum class FiltrationMode { FixedOrder, IdentifyPermutations };

struct FiltrationNode {
  ChainExpr chain;
  std::size_t level = 0;  // number of MERGE connectives
  Multicomplex complex;
  BettiVector betti;
};

/// Covering relation realised by f_j on the source's representative chain.
struct Cover {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t f_index = 0;
};

struct FiltrationPoset {
  FiltrationMode mode = FiltrationMode::IdentifyPermutations;
  std::size_t atom_count = 0;
  /// Level-major, breadth-first discovery order. A node's index is its step
  /// counter delta.
  std::vector<FiltrationNode> nodes;
  std::vector<Cover> covers;

  std::size_t top_index() const noexcept { return nodes.size() - 1; }
};

/// Complex of a chain: each MERGE block becomes one clique multicomplex and
/// the blocks are juxtaposed.
Multicomplex chain_complex(const ChainExpr& x, const ChainEnv& env,
                           CellPolicy policy = CellPolicy::Canonical);

FiltrationPoset build_filtration(const ChainExpr& start, const ChainEnv& env,
                                 FiltrationMode mode = FiltrationMode::IdentifyPermutations,
                                 CellPolicy policy = CellPolicy::Canonical);

/// Nodes at level j; requires j <= k - 1.
std::vector<const FiltrationNode*> level(const FiltrationPoset& p, std::size_t j);

struct TraceRow {
  std::size_t delta = 0;
  std::size_t level = 0;
  std::string chain;
  std::size_t beta = 0;
};

/// beta_d per node in delta order.
std::vector<TraceRow> betti_trace(const FiltrationPoset& p, std::size_t d);

/// beta_d along an explicit sequence of node indices.
std::vector<std::size_t> betti_along(const FiltrationPoset& p, const std::vector<std::size_t>& path,
                                     std::size_t d);

/// Level sizes and fold count as predicted by the closed forms
/// C(k, j+1) and 2^k - k, next to what the built poset measures.
struct LevelReport {
  std::size_t k = 0;
  std::vector<std::size_t> formula_level_sizes;
  std::vector<std::size_t> measured_level_sizes;
  std::size_t formula_folds = 0;
  std::size_t measured_folds = 0;
};

LevelReport level_report(const FiltrationPoset& p);
std::string to_string(const LevelReport& r);

/// Graphviz rendering; nodes are labelled "chain | β = (…)".
std::string to_dot(const FiltrationPoset& p);

}  // namespace mlat
