#include "mlat/filtration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mlat/error.hpp"

namespace mlat {

namespace {

using Partition = std::vector<std::vector<std::size_t>>;

ChainExpr chain_of(const std::vector<std::string>& atoms, const Partition& blocks) {
  std::vector<std::string> seq;
  std::vector<Connective> conn;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (!seq.empty()) conn.push_back(i == 0 ? Connective::Tensor : Connective::Merge);
      seq.push_back(atoms[blocks[b][i]]);
    }
  }
  return ChainExpr(std::move(seq), std::move(conn));
}

void ordered_partitions(std::size_t remaining, std::size_t k, Partition& prefix,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < k; ++i) {
      if ((sub >> i) & 1u) block.push_back(i);
    }
    prefix.push_back(std::move(block));
    ordered_partitions(remaining & ~sub, k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Multigraph> block_key(const ChainExpr& x, const ChainEnv& env) {
  auto layers = evaluate(x, env).layers;
  std::sort(layers.begin(), layers.end());
  return layers;
}

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::vector<ChainExpr> enumerate_chains(const std::vector<std::string>& atoms,
                                        bool include_permutations) {
  if (atoms.empty()) throw Error(ErrorKind::InvalidChain, "a chain needs at least one atom");
  if (!include_permutations) return fixed_order_chains(atoms);
  if (atoms.size() >= 16) throw Error(ErrorKind::IndexOutOfRange, "too many atoms to enumerate");

  std::vector<Partition> parts;
  Partition prefix;
  ordered_partitions((std::size_t{1} << atoms.size()) - 1, atoms.size(), prefix, parts);
  std::vector<ChainExpr> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(chain_of(atoms, p));
  std::stable_sort(out.begin(), out.end(), [](const ChainExpr& a, const ChainExpr& b) {
    return a.merge_count() < b.merge_count();
  });
  return out;
}

bool leq_up_to_merge_order(const ChainExpr& x, const ChainExpr& y) {
  auto xb = x.blocks();
  auto yb = y.blocks();
  std::size_t i = 0;
  for (const auto& target : yb) {
    std::multiset<std::string> want(target.begin(), target.end());
    std::multiset<std::string> have;
    while (have.size() < want.size() && i < xb.size()) {
      have.insert(xb[i].begin(), xb[i].end());
      ++i;
    }
    if (have != want) return false;
  }
  return i == xb.size();
}

Multicomplex chain_complex(const ChainExpr& x, const ChainEnv& env, CellPolicy policy) {
  std::vector<Multicomplex> blocks;
  for (const auto& layer : evaluate(x, env).layers) {
    blocks.push_back(clique_multicomplex(layer, policy));
  }
  return juxtapose(blocks);
}

FiltrationPoset build_filtration(const ChainExpr& start, const ChainEnv& env,
                                 FiltrationMode mode, CellPolicy policy) {
  for (const auto& a : start.atoms()) (void)env.lookup(a);

  FiltrationPoset poset;
  poset.mode = mode;
  poset.atom_count = start.length();

  std::set<std::pair<std::size_t, std::size_t>> seen_covers;
  auto add_node = [&](ChainExpr chain) {
    FiltrationNode node;
    node.level = chain.merge_count();
    node.complex = chain_complex(chain, env, policy);
    node.betti = betti(node.complex);
    node.chain = std::move(chain);
    poset.nodes.push_back(std::move(node));
    return poset.nodes.size() - 1;
  };
  auto add_cover = [&](std::size_t from, std::size_t to, std::size_t j) {
    if (seen_covers.emplace(from, to).second) poset.covers.push_back(Cover{from, to, j});
  };

  if (mode == FiltrationMode::FixedOrder) {
    std::map<ChainExpr, std::size_t> index;
    index.emplace(start, add_node(start));
    for (std::size_t cur = 0; cur < poset.nodes.size(); ++cur) {
      const ChainExpr chain = poset.nodes[cur].chain;
      for (std::size_t j = 1; j < chain.length(); ++j) {
        if (chain.connectives()[j - 1] == Connective::Merge) continue;
        auto next = apply_f(j, chain);
        auto [it, fresh] = index.emplace(next, 0);
        if (fresh) it->second = add_node(next);
        add_cover(cur, it->second, j);
      }
    }
    return poset;
  }

  // Blocks are index sets into the start chain's atoms, kept sorted by their
  // smallest index so each partition has one representative chain.
  Partition first;
  {
    std::size_t pos = 0;
    for (const auto& b : start.blocks()) {
      first.emplace_back();
      for (std::size_t i = 0; i < b.size(); ++i) first.back().push_back(pos++);
    }
    std::sort(first.begin(), first.end());
  }

  std::map<std::vector<Multigraph>, std::size_t> index;
  std::vector<Partition> partition_of;
  {
    auto chain = chain_of(start.atoms(), first);
    index.emplace(block_key(chain, env), add_node(chain));
    partition_of.push_back(first);
  }
  for (std::size_t cur = 0; cur < poset.nodes.size(); ++cur) {
    const Partition parts = partition_of[cur];
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        // f_j acts on the reordering that places block b right after block a.
        std::size_t j = 0;
        for (std::size_t i = 0; i <= a; ++i) j += parts[i].size();

        Partition merged;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (i == b) continue;
          merged.push_back(parts[i]);
          if (i == a) {
            merged.back().insert(merged.back().end(), parts[b].begin(), parts[b].end());
            std::sort(merged.back().begin(), merged.back().end());
          }
        }
        std::sort(merged.begin(), merged.end());
        auto chain = chain_of(start.atoms(), merged);
        auto [it, fresh] = index.emplace(block_key(chain, env), 0);
        if (fresh) {
          it->second = add_node(std::move(chain));
          partition_of.push_back(std::move(merged));
        }
        add_cover(cur, it->second, j);
      }
    }
  }
  return poset;
}

std::vector<const FiltrationNode*> level(const FiltrationPoset& p, std::size_t j) {
  if (p.atom_count == 0 || j > p.atom_count - 1) {
    throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(j) + " of a " +
                                                std::to_string(p.atom_count) + "-atom filtration");
  }
  std::vector<const FiltrationNode*> out;
  for (const auto& n : p.nodes) {
    if (n.level == j) out.push_back(&n);
  }
  return out;
}

std::vector<TraceRow> betti_trace(const FiltrationPoset& p, std::size_t d) {
  std::vector<TraceRow> out;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& n = p.nodes[i];
    out.push_back(TraceRow{i, n.level, to_string(n.chain), n.betti.at(d)});
  }
  return out;
}

std::vector<std::size_t> betti_along(const FiltrationPoset& p, const std::vector<std::size_t>& path,
                                     std::size_t d) {
  std::vector<std::size_t> out;
  for (auto i : path) {
    if (i >= p.nodes.size()) throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(i));
    out.push_back(p.nodes[i].betti.at(d));
  }
  return out;
}

LevelReport level_report(const FiltrationPoset& p) {
  LevelReport r;
  r.k = p.atom_count;
  r.measured_level_sizes.assign(r.k, 0);
  for (std::size_t j = 0; j < r.k; ++j) r.formula_level_sizes.push_back(binomial(r.k, j + 1));
  for (const auto& n : p.nodes) ++r.measured_level_sizes[n.level];
  r.formula_folds = (std::size_t{1} << r.k) - r.k;
  r.measured_folds = p.nodes.size();
  return r;
}

std::string to_string(const LevelReport& r) {
  std::ostringstream os;
  auto list = [&](const std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "/" : "") << v[i];
  };
  os << "level sizes (formula C(k,j+1)): ";
  list(r.formula_level_sizes);
  os << "\nlevel sizes (measured): ";
  list(r.measured_level_sizes);
  os << "\nfolds (formula 2^k-k): " << r.formula_folds << "\nfolds (measured): "
     << r.measured_folds << "\n";
  if (r.formula_level_sizes != r.measured_level_sizes || r.formula_folds != r.measured_folds) {
    os << "note: closed forms and measurement differ for k=" << r.k << "\n";
  }
  return os.str();
}

std::string to_dot(const FiltrationPoset& p) {
  std::ostringstream os;
  os << "digraph filtration {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& n = p.nodes[i];
    os << "  n" << i << " [label=\"" << dot_escape(to_string(n.chain)) << " | β = "
       << to_string(n.betti) << "\"];\n";
  }
  for (const auto& c : p.covers) {
    os << "  n" << c.from << " -> n" << c.to << " [label=\"f_" << c.f_index << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mlat
