#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlat/multigraph.hpp"

namespace mlat {

enum class Connective : std::uint8_t { Tensor, Merge };

/// A flat concatenation `G1 c1 G2 c2 ... Gk` with each connective TENSOR or
/// MERGE. MERGE binds tighter, so maximal MERGE runs form the blocks.
class ChainExpr {
 public:
  ChainExpr() = default;
  ChainExpr(std::vector<std::string> atoms, std::vector<Connective> connectives);

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<Connective>& connectives() const noexcept { return connectives_; }
  std::size_t length() const noexcept { return atoms_.size(); }

  /// Number of MERGE connectives; the filtration level of the chain.
  std::size_t merge_count() const noexcept;

  /// Atoms grouped into maximal MERGE runs, in chain order.
  std::vector<std::vector<std::string>> blocks() const;

  auto operator<=>(const ChainExpr&) const = default;
  bool operator==(const ChainExpr&) const = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<Connective> connectives_;
};

enum class Notation { Symbols, Ascii };

/// `G ⊗ H ⊙ K` (Symbols) or `G | H . K` (Ascii, the parser's syntax).
std::string to_string(const ChainExpr& x, Notation notation = Notation::Symbols);

std::vector<std::string> default_atoms(std::size_t k);

/// True iff both chains share the atom sequence and no position has MERGE in
/// `x` where `y` has TENSOR. Chains over different atom sequences are
/// incomparable.
bool leq(const ChainExpr& x, const ChainExpr& y);

/// f_j: turns connective j (1-based) into MERGE; j = 0 is the identity.
ChainExpr apply_f(std::size_t j, const ChainExpr& x);

ChainExpr meet(const ChainExpr& x, const ChainExpr& y);
ChainExpr join(const ChainExpr& x, const ChainExpr& y);
ChainExpr complement(const ChainExpr& x);

/// Partial minimum. `std::nullopt` is the Undefined value for incomparable
/// operands.
std::optional<ChainExpr> plus(const ChainExpr& x, const ChainExpr& y);

ChainExpr top(const std::vector<std::string>& atoms);
ChainExpr bottom(const std::vector<std::string>& atoms);
inline ChainExpr top(std::size_t k) { return top(default_atoms(k)); }

/// The k! all-TENSOR chains, one per atom permutation (lexicographic).
std::vector<ChainExpr> minimals(const std::vector<std::string>& atoms);

/// All 2^(k-1) chains over a fixed atom order, indexed by the bitmask of
/// MERGE positions.
std::vector<ChainExpr> fixed_order_chains(const std::vector<std::string>& atoms);

/// Bound atom names sharing one palette and node universe.
struct ChainEnv {
  Palette palette;
  std::map<std::string, Multigraph> graphs;

  const Multigraph& lookup(const std::string& atom) const;
  std::set<NodeId> node_universe() const;
};

/// Each MERGE block folded into one multigraph; blocks stay juxtaposed.
Multilayer evaluate(const ChainExpr& x, const ChainEnv& env);

}  // namespace mlat
