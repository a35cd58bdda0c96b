#include "mlat/chain.hpp"

#include <algorithm>
#include <numeric>

#include "mlat/error.hpp"

namespace mlat {

ChainExpr::ChainExpr(std::vector<std::string> atoms, std::vector<Connective> connectives)
    : atoms_(std::move(atoms)), connectives_(std::move(connectives)) {
  if (atoms_.empty()) throw Error(ErrorKind::InvalidChain, "a chain needs at least one atom");
  if (connectives_.size() + 1 != atoms_.size()) {
    throw Error(ErrorKind::InvalidChain, "expected " + std::to_string(atoms_.size() - 1) +
                                             " connectives, got " +
                                             std::to_string(connectives_.size()));
  }
}

std::size_t ChainExpr::merge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(connectives_.begin(), connectives_.end(), Connective::Merge));
}

std::vector<std::vector<std::string>> ChainExpr::blocks() const {
  std::vector<std::vector<std::string>> out;
  if (atoms_.empty()) return out;
  out.push_back({atoms_.front()});
  for (std::size_t i = 0; i < connectives_.size(); ++i) {
    if (connectives_[i] == Connective::Tensor) out.emplace_back();
    out.back().push_back(atoms_[i + 1]);
  }
  return out;
}

std::string to_string(const ChainExpr& x, Notation notation) {
  const char* tensor = notation == Notation::Symbols ? " ⊗ " : " | ";
  const char* merge = notation == Notation::Symbols ? " ⊙ " : " . ";
  std::string out;
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (i > 0) out += x.connectives()[i - 1] == Connective::Tensor ? tensor : merge;
    out += x.atoms()[i];
  }
  return out;
}

std::vector<std::string> default_atoms(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back("G" + std::to_string(i));
  return out;
}

namespace {

void require_same_atoms(const ChainExpr& x, const ChainExpr& y) {
  if (x.atoms() != y.atoms()) {
    throw Error(ErrorKind::IncomparableAtoms,
                to_string(x, Notation::Ascii) + " vs " + to_string(y, Notation::Ascii));
  }
}

template <typename Op>
ChainExpr positionwise(const ChainExpr& x, const ChainExpr& y, Op op) {
  require_same_atoms(x, y);
  std::vector<Connective> out(x.connectives().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(x.connectives()[i], y.connectives()[i]);
  return ChainExpr(x.atoms(), std::move(out));
}

}  // namespace

bool leq(const ChainExpr& x, const ChainExpr& y) {
  if (x.atoms() != y.atoms()) return false;
  for (std::size_t l = 0; l < x.connectives().size(); ++l) {
    if (x.connectives()[l] == Connective::Merge && y.connectives()[l] == Connective::Tensor) {
      return false;
    }
  }
  return true;
}

ChainExpr apply_f(std::size_t j, const ChainExpr& x) {
  if (j == 0) return x;
  if (j > x.connectives().size()) {
    throw Error(ErrorKind::IndexOutOfRange, "f_" + std::to_string(j) + " on a chain of length " +
                                                std::to_string(x.length()));
  }
  auto conn = x.connectives();
  conn[j - 1] = Connective::Merge;
  return ChainExpr(x.atoms(), std::move(conn));
}

ChainExpr meet(const ChainExpr& x, const ChainExpr& y) {
  return positionwise(x, y, [](Connective a, Connective b) {
    return (a == Connective::Tensor || b == Connective::Tensor) ? Connective::Tensor
                                                                : Connective::Merge;
  });
}

ChainExpr join(const ChainExpr& x, const ChainExpr& y) {
  return positionwise(x, y, [](Connective a, Connective b) {
    return (a == Connective::Merge || b == Connective::Merge) ? Connective::Merge
                                                              : Connective::Tensor;
  });
}

ChainExpr complement(const ChainExpr& x) {
  auto conn = x.connectives();
  for (auto& c : conn) c = c == Connective::Tensor ? Connective::Merge : Connective::Tensor;
  return ChainExpr(x.atoms(), std::move(conn));
}

std::optional<ChainExpr> plus(const ChainExpr& x, const ChainExpr& y) {
  if (leq(y, x)) return y;
  if (leq(x, y)) return x;
  return std::nullopt;
}

ChainExpr top(const std::vector<std::string>& atoms) {
  return ChainExpr(atoms, std::vector<Connective>(atoms.empty() ? 0 : atoms.size() - 1,
                                                  Connective::Merge));
}

ChainExpr bottom(const std::vector<std::string>& atoms) {
  return ChainExpr(atoms, std::vector<Connective>(atoms.empty() ? 0 : atoms.size() - 1,
                                                  Connective::Tensor));
}

std::vector<ChainExpr> minimals(const std::vector<std::string>& atoms) {
  std::vector<std::size_t> perm(atoms.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<ChainExpr> out;
  do {
    std::vector<std::string> permuted;
    for (auto i : perm) permuted.push_back(atoms[i]);
    out.push_back(bottom(permuted));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<ChainExpr> fixed_order_chains(const std::vector<std::string>& atoms) {
  if (atoms.empty()) throw Error(ErrorKind::InvalidChain, "a chain needs at least one atom");
  const std::size_t gaps = atoms.size() - 1;
  std::vector<ChainExpr> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
    std::vector<Connective> conn(gaps);
    for (std::size_t i = 0; i < gaps; ++i) {
      conn[i] = (mask >> i) & 1u ? Connective::Merge : Connective::Tensor;
    }
    out.emplace_back(atoms, std::move(conn));
  }
  return out;
}

const Multigraph& ChainEnv::lookup(const std::string& atom) const {
  auto it = graphs.find(atom);
  if (it == graphs.end()) throw Error(ErrorKind::UnknownAtom, "'" + atom + "'");
  return it->second;
}

std::set<NodeId> ChainEnv::node_universe() const {
  std::set<NodeId> out;
  for (const auto& [name, g] : graphs) out.insert(g.nodes().begin(), g.nodes().end());
  return out;
}

Multilayer evaluate(const ChainExpr& x, const ChainEnv& env) {
  Multilayer out;
  for (const auto& block : x.blocks()) {
    Multigraph acc = env.lookup(block.front());
    for (std::size_t i = 1; i < block.size(); ++i) acc = merge(acc, env.lookup(block[i]));
    out.layers.push_back(std::move(acc));
  }
  return out;
}

}  // namespace mlat
