#include "mlat/chain_parser.hpp"

#include <cctype>

#include "mlat/error.hpp"

namespace mlat {

ChainSyntaxTree ChainSyntaxTree::leaf(std::string name, std::size_t pos) {
  ChainSyntaxTree t;
  t.kind = Kind::Atom;
  t.atom = std::move(name);
  t.position = pos;
  return t;
}

ChainSyntaxTree ChainSyntaxTree::binary(Kind kind, ChainSyntaxTree lhs, ChainSyntaxTree rhs,
                                        std::size_t pos) {
  ChainSyntaxTree t;
  t.kind = kind;
  t.position = pos;
  t.children.push_back(std::move(lhs));
  t.children.push_back(std::move(rhs));
  return t;
}

bool ChainSyntaxTree::same_shape(const ChainSyntaxTree& other) const {
  if (kind != other.kind || atom != other.atom || children.size() != other.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i].same_shape(other.children[i])) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ChainSyntaxTree parse() {
    auto tree = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw SyntaxError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    }
    return tree;
  }

 private:
  ChainSyntaxTree expr() {
    auto lhs = term();
    while (peek() == '|') {
      const auto at = pos_++;
      lhs = ChainSyntaxTree::binary(ChainSyntaxTree::Kind::Tensor, std::move(lhs), term(), at);
    }
    return lhs;
  }

  ChainSyntaxTree term() {
    auto lhs = factor();
    while (peek() == '.') {
      const auto at = pos_++;
      lhs = ChainSyntaxTree::binary(ChainSyntaxTree::Kind::Merge, std::move(lhs), factor(), at);
    }
    return lhs;
  }

  ChainSyntaxTree factor() {
    const char c = peek();
    if (c == '(') {
      const auto open = pos_++;
      auto inner = expr();
      if (peek() != ')') throw SyntaxError(pos_, "missing ')' for '(' at " + std::to_string(open));
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return ChainSyntaxTree::leaf(std::string(src_.substr(start, pos_ - start)), start);
    }
    if (c == '\0') throw SyntaxError(pos_, "expected an atom, found end of input");
    throw SyntaxError(pos_, std::string("expected an atom, found '") + c + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(ChainSyntaxTree::Kind k) {
  switch (k) {
    case ChainSyntaxTree::Kind::Tensor: return 1;
    case ChainSyntaxTree::Kind::Merge: return 2;
    case ChainSyntaxTree::Kind::Atom: return 3;
  }
  return 0;
}

}  // namespace

ChainSyntaxTree parse_chain(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const ChainSyntaxTree& tree) {
  using Kind = ChainSyntaxTree::Kind;
  if (tree.kind == Kind::Atom) return tree.atom;
  const int own = precedence(tree.kind);
  const auto& lhs = tree.children[0];
  const auto& rhs = tree.children[1];
  std::string l = to_string(lhs);
  std::string r = to_string(rhs);
  if (precedence(lhs.kind) < own) l = "(" + l + ")";
  if (precedence(rhs.kind) <= own) r = "(" + r + ")";
  return l + (tree.kind == Kind::Tensor ? " | " : " . ") + r;
}

ChainExpr flatten(const ChainSyntaxTree& tree) {
  using Kind = ChainSyntaxTree::Kind;
  if (tree.kind == Kind::Atom) return ChainExpr({tree.atom}, {});

  auto lhs = flatten(tree.children[0]);
  auto rhs = flatten(tree.children[1]);
  const Connective joint = tree.kind == Kind::Tensor ? Connective::Tensor : Connective::Merge;
  if (joint == Connective::Merge && (lhs.merge_count() + 1 != lhs.length() ||
                                     rhs.merge_count() + 1 != rhs.length())) {
    throw Error(ErrorKind::UnsupportedShape,
                "merge of a tensor group at position " + std::to_string(tree.position) +
                    " has no flat chain form");
  }
  auto atoms = lhs.atoms();
  atoms.insert(atoms.end(), rhs.atoms().begin(), rhs.atoms().end());
  auto conn = lhs.connectives();
  conn.push_back(joint);
  conn.insert(conn.end(), rhs.connectives().begin(), rhs.connectives().end());
  return ChainExpr(std::move(atoms), std::move(conn));
}

void bind_atoms(const ChainExpr& x, const ChainEnv& env) {
  for (const auto& a : x.atoms()) (void)env.lookup(a);
}

}  // namespace mlat
