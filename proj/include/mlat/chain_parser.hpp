#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mlat/chain.hpp"

namespace mlat {

/// Parse tree of the chain grammar:
///
///   expr   := term ('|' term)*        '|' is TENSOR
///   term   := factor ('.' factor)*    '.' is MERGE, binds tighter
///   factor := IDENT | '(' expr ')'
///
/// Binary nodes are left-associative.
struct ChainSyntaxTree {
  enum class Kind { Atom, Tensor, Merge };

  Kind kind = Kind::Atom;
  std::string atom;            // Kind::Atom only
  std::size_t position = 0;    // offset of the atom or operator in the source
  std::vector<ChainSyntaxTree> children;

  static ChainSyntaxTree leaf(std::string name, std::size_t pos);
  static ChainSyntaxTree binary(Kind kind, ChainSyntaxTree lhs, ChainSyntaxTree rhs,
                                std::size_t pos);

  /// Structural equality; source positions are ignored.
  bool same_shape(const ChainSyntaxTree& other) const;
};

/// Throws `SyntaxError` with the offending offset.
ChainSyntaxTree parse_chain(std::string_view src);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string to_string(const ChainSyntaxTree& tree);

/// Flattens to a chain. A MERGE whose operand contains a TENSOR has no flat
/// form and raises `UnsupportedShape`.
ChainExpr flatten(const ChainSyntaxTree& tree);

inline ChainExpr parse_chain_expr(std::string_view src) { return flatten(parse_chain(src)); }

/// Raises `UnknownAtom` for the first atom not bound in `env`.
void bind_atoms(const ChainExpr& x, const ChainEnv& env);

}  // namespace mlat
