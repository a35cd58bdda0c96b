#include "mlat/commands.hpp"

#include <cstdio>
#include <iomanip>
#include <random>

#include "mlat/chain_parser.hpp"
#include "mlat/error.hpp"
#include "mlat/laws.hpp"
#include "mlat/random.hpp"

namespace mlat {

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

ChainExpr bound_chain(const Workspace& ws, const std::string& src) {
  auto x = parse_chain_expr(src);
  bind_atoms(x, ws.env);
  return x;
}

void print_params(std::ostream& out, const IncrementalParams& p) {
  out << "  d=" << p.dimension << ": beta_G=" << p.beta_g << " beta_H=" << p.beta_h
      << " n_G=" << p.n_g << " n_H=" << p.n_h << " p_G=" << p.p_g << " p_H=" << p.p_h
      << " cl=" << p.cl << " dup=" << p.dup << "\n";
}

}  // namespace

std::string default_chain(const Workspace& ws) {
  if (ws.chain) return *ws.chain;
  if (ws.env.graphs.empty()) throw UsageError("workspace has no graphs and no chain");
  std::string out;
  for (const auto& [name, g] : ws.env.graphs) out += (out.empty() ? "" : " | ") + name;
  return out;
}

int cmd_parse(const std::string& src, const CommandOptions& opts, std::ostream& out) {
  const auto tree = parse_chain(src);
  const auto flat = flatten(tree);
  if (opts.json) {
    Json doc = {{"tree", to_string(tree)},
                {"chain", to_string(flat)},
                {"atoms", flat.atoms()},
                {"blocks", flat.blocks()},
                {"level", flat.merge_count()}};
    out << doc.dump(2) << "\n";
  } else {
    out << "tree:   " << to_string(tree) << "\nchain:  " << to_string(flat)
        << "\nlevel:  " << flat.merge_count() << "\n";
  }
  return exit_code::ok;
}

int cmd_merge(const Workspace& ws, const std::string& g, const std::string& h, bool emit_complex,
              const CommandOptions& opts, std::ostream& out) {
  const auto merged = merge(ws.env.lookup(g), ws.env.lookup(h));
  if (emit_complex) {
    out << to_json(clique_multicomplex(merged, opts.policy)).dump(2) << "\n";
    return exit_code::ok;
  }
  if (opts.json) {
    out << to_json(merged).dump(2) << "\n";
    return exit_code::ok;
  }
  const auto x = clique_multicomplex(merged, opts.policy);
  out << g << " . " << h << " = " << to_string(merged) << "\n";
  for (int d = 0; d <= x.dimension(); ++d) {
    const auto ud = static_cast<std::size_t>(d);
    out << "  " << d << "-cells: " << x.cell_count(ud) << "  duplications: "
        << duplications(x, ud) << "\n";
  }
  return exit_code::ok;
}

namespace {

void print_betti(const std::optional<ChainExpr>& x, const Multicomplex& complex,
                 const CommandOptions& opts, std::ostream& out) {
  const auto b = betti(complex);
  if (opts.json) {
    Json counts = Json::array();
    for (int d = 0; d <= complex.dimension(); ++d) {
      counts.push_back(complex.cell_count(static_cast<std::size_t>(d)));
    }
    Json doc = Json::object();
    if (x) {
      doc["chain"] = to_string(*x);
      doc["level"] = x->merge_count();
    }
    doc["betti"] = to_json(b);
    doc["cells"] = std::move(counts);
    out << doc.dump(2) << "\n";
    return;
  }
  if (x) out << "chain: " << to_string(*x) << "\n";
  out << "beta:  " << to_string(b) << "\n";
  out << "d  cells  beta_d\n";
  for (int d = 0; d <= complex.dimension(); ++d) {
    const auto ud = static_cast<std::size_t>(d);
    out << d << "  " << std::setw(5) << complex.cell_count(ud) << "  " << b.at(ud) << "\n";
  }
}

}  // namespace

int cmd_betti(const Workspace& ws, const std::optional<std::string>& chain,
              const CommandOptions& opts, std::ostream& out) {
  const auto x = bound_chain(ws, chain ? *chain : default_chain(ws));
  print_betti(x, chain_complex(x, ws.env, opts.policy), opts, out);
  return exit_code::ok;
}

int cmd_betti_complex(const Multicomplex& x, const CommandOptions& opts, std::ostream& out) {
  print_betti(std::nullopt, x, opts, out);
  return exit_code::ok;
}

int cmd_filtrate(const Workspace& ws, const std::optional<std::string>& start, bool fixed_order,
                 const CommandOptions& opts, std::ostream& out) {
  const auto x = bound_chain(ws, start ? *start : default_chain(ws));
  const auto mode = fixed_order ? FiltrationMode::FixedOrder : FiltrationMode::IdentifyPermutations;
  const auto p = build_filtration(x, ws.env, mode, opts.policy);
  if (opts.dot) {
    out << to_dot(p);
    return exit_code::ok;
  }
  if (opts.json) {
    out << to_json(p).dump(2) << "\n";
    return exit_code::ok;
  }
  out << "delta  level  beta  chain\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& n = p.nodes[i];
    out << std::setw(5) << i << "  " << std::setw(5) << n.level << "  " << to_string(n.betti)
        << "  " << to_string(n.chain) << "\n";
  }
  out << to_string(level_report(p));
  return exit_code::ok;
}

int cmd_lattice(const std::vector<std::string>& atoms, const CommandOptions& opts,
                std::ostream& out) {
  const auto chains = fixed_order_chains(atoms);
  Json doc = Json::array();
  for (const auto& x : chains) {
    std::vector<std::string> up;
    for (std::size_t j = 1; j < x.length(); ++j) {
      if (x.connectives()[j - 1] == Connective::Tensor) up.push_back(to_string(apply_f(j, x)));
    }
    if (opts.json) {
      doc.push_back({{"chain", to_string(x)},
                     {"level", x.merge_count()},
                     {"complement", to_string(complement(x))},
                     {"covers", up}});
    } else {
      out << "[" << x.merge_count() << "] " << to_string(x)
          << "   complement: " << to_string(complement(x)) << "\n";
      for (const auto& u : up) out << "      -> " << u << "\n";
    }
  }
  if (opts.json) out << doc.dump(2) << "\n";
  return exit_code::ok;
}

int cmd_check_laws(const Workspace* ws, std::size_t k, const CommandOptions& opts,
                   std::ostream& out, std::size_t max_k) {
  if (k == 0 || k > max_k) {
    throw UsageError("k must lie in [1, " + std::to_string(max_k) + "]");
  }
  auto violations = check_lattice_laws(default_atoms(k));
  const auto lattice_count = violations.size();

  std::vector<Multigraph> graphs;
  if (ws) {
    for (const auto& [name, g] : ws->env.graphs) graphs.push_back(g);
  } else {
    std::mt19937_64 rng(opts.seed);
    RandomGraphOptions ro;
    ro.max_nodes = 6;
    for (int i = 0; i < 4; ++i) graphs.push_back(random_multigraph(rng, ro));
  }
  std::size_t triples = 0;
  for (const auto& a : graphs) {
    for (const auto& b : graphs) {
      for (const auto& c : graphs) {
        auto more = check_monoidal_laws(a, b, c, opts.policy);
        violations.insert(violations.end(), more.begin(), more.end());
        ++triples;
      }
    }
  }

  if (opts.json) {
    Json list = Json::array();
    for (const auto& v : violations) list.push_back({{"law", v.law}, {"witness", v.witness}});
    out << Json{{"k", k},
                {"chains", std::size_t{1} << (k - 1)},
                {"triples", triples},
                {"violations", list}}
               .dump(2)
        << "\n";
  } else {
    out << "lattice laws on " << (std::size_t{1} << (k - 1)) << " chains (k=" << k
        << "): " << lattice_count << " violation(s)\n";
    out << "monoidal laws on " << triples << " graph triple(s): "
        << violations.size() - lattice_count << " violation(s)\n";
    for (const auto& v : violations) {
      out << to_string(ErrorKind::LawViolation) << ": " << v.law << " [" << v.witness << "]\n";
    }
  }
  return violations.empty() ? exit_code::ok : exit_code::law_violation;
}

int cmd_incremental(const Workspace& ws, const std::string& g, const std::string& h,
                    const CommandOptions& opts, std::ostream& out) {
  const auto r = validate(ws.env.lookup(g), ws.env.lookup(h), opts.policy);
  if (opts.json) {
    auto doc = to_json(r);
    doc["G"] = g;
    doc["H"] = h;
    out << doc.dump(2) << "\n";
    return exit_code::ok;
  }
  out << "merge " << g << " . " << h << " (cl counted per target dimension)\n";
  print_params(out, r.params1);
  print_params(out, r.params2);
  out << "beta_1: formula " << r.formula_beta1 << ", oracle " << r.oracle_beta1
      << (r.agrees1 ? "  agree" : "  DISAGREE") << "\n";
  out << "beta_2: formula " << r.formula_beta2 << ", oracle " << r.oracle_beta2
      << (r.agrees2 ? "  agree" : "  DISAGREE") << "\n";
  return exit_code::ok;
}

int cmd_reference_cases(const CommandOptions& opts, std::ostream& out) {
  const auto findings = check_reference_cases();
  const auto cases = reference_cases();
  if (opts.json) {
    Json list = Json::array();
    for (std::size_t i = 0; i < findings.size(); ++i) {
      const auto& f = findings[i];
      list.push_back({{"case", f.name},
                      {"d", f.dimension},
                      {"params", to_json(cases[i].params)},
                      {"formula", f.formula},
                      {"stated", f.stated},
                      {"discrepancy", f.discrepancy}});
    }
    out << list.dump(2) << "\n";
    return exit_code::ok;
  }
  out << "case  d  formula  stated\n";
  for (const auto& f : findings) {
    out << std::setw(4) << f.name << "  " << f.dimension << "  " << std::setw(7) << f.formula
        << "  " << std::setw(6) << f.stated << (f.discrepancy ? "  DISCREPANCY" : "") << "\n";
  }
  return exit_code::ok;
}

int cmd_fuzz(std::size_t pairs, const CommandOptions& opts, std::ostream& jsonl,
             std::ostream& summary) {
  std::mt19937_64 rng(opts.seed);
  RandomGraphOptions ro;
  ro.max_nodes = 7;
  std::size_t agree1 = 0;
  std::size_t agree2 = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto g = random_multigraph(rng, ro);
    const auto h = random_multigraph(rng, ro);
    const auto r = validate(g, h, opts.policy);
    agree1 += r.agrees1;
    agree2 += r.agrees2;
    auto rec = to_json(r);
    Json record = {{"inputs_digest", hex64(fnv1a(Json::array({to_json(g), to_json(h)}).dump()))}};
    for (auto& [key, value] : rec.items()) record[key] = value;
    jsonl << record.dump() << "\n";
  }
  auto rate = [&](std::size_t n) { return pairs ? static_cast<double>(n) / pairs : 0.0; };
  summary << "dimension,pairs,agreements,rate\n";
  summary << "1," << pairs << "," << agree1 << "," << rate(agree1) << "\n";
  summary << "2," << pairs << "," << agree2 << "," << rate(agree2) << "\n";
  return exit_code::ok;
}

}  // namespace mlat
