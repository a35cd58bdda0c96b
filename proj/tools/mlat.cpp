#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mlat/chain_parser.hpp"
#include "mlat/commands.hpp"
#include "mlat/error.hpp"

namespace {

mlat::Workspace require_workspace(const std::string& path) {
  if (path.empty()) throw mlat::UsageError("this command needs --workspace <path>");
  return mlat::load_workspace(path);
}

std::optional<std::string> optional_arg(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured multigraph interaction lattices and their multicomplex homology"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string workspace;
  std::string policy = "canonical";
  mlat::CommandOptions opts;
  app.add_option("--workspace", workspace, "Workspace JSON file");
  app.add_flag("--json", opts.json, "Emit JSON");
  app.add_flag("--dot", opts.dot, "Emit Graphviz DOT (filtrate)");
  app.add_option("--seed", opts.seed, "Seed for random inputs");
  app.add_option("--policy", policy, "Cell policy for dimension >= 3")
      ->check(CLI::IsMember({"canonical", "per-combination"}));

  std::string chain;
  auto* parse = app.add_subcommand("parse", "Parse a chain expression");
  parse->add_option("chain", chain, "Chain expression, e.g. \"G | H . K\"")->required();

  std::string g, h;
  bool emit_complex = false;
  auto* merge = app.add_subcommand("merge", "Merge two workspace graphs");
  merge->add_option("first", g, "First graph name")->required();
  merge->add_option("second", h, "Second graph name")->required();
  merge->add_flag("--emit-complex", emit_complex, "Print the merged clique multicomplex as JSON");

  auto* betti = app.add_subcommand("betti", "Betti numbers of a chain's complex");
  betti->add_option("chain", chain, "Chain expression (default: workspace chain)");
  std::string complex_path;
  betti->add_option("--complex", complex_path, "Serialized multicomplex instead of a workspace");

  bool fixed_order = false;
  auto* filtrate = app.add_subcommand("filtrate", "Interaction filtration with Betti annotations");
  filtrate->add_option("chain", chain, "Start chain (default: workspace chain)");
  filtrate->add_flag("--fixed-order", fixed_order, "Keep the TENSOR order of the start chain");

  std::size_t k = 3;
  auto* lattice = app.add_subcommand("lattice", "Fixed-order chain lattice");
  lattice->add_option("--k", k, "Number of atoms when no workspace chain is given")
      ->check(CLI::Range(1, 12));

  auto* laws = app.add_subcommand("check-laws", "Exhaustive lattice and monoidal law check");
  laws->add_option("--k", k, "Number of atoms");

  bool reference = false;
  auto* incremental = app.add_subcommand("incremental", "Merge formulas against direct homology");
  incremental->add_option("first", g, "First graph name");
  incremental->add_option("second", h, "Second graph name");
  incremental->add_flag("--reference", reference, "Evaluate the worked reference parameter sets");

  std::size_t count = 100;
  std::string summary_path;
  auto* fuzz = app.add_subcommand("fuzz", "Formula-vs-oracle fuzzing as JSON lines");
  fuzz->add_option("--count", count, "Number of random pairs");
  fuzz->add_option("--summary", summary_path, "Write the agreement CSV here (default: stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? mlat::exit_code::ok : mlat::exit_code::usage;
  }

  try {
    opts.policy = mlat::parse_policy(policy);
    auto& out = std::cout;
    if (*parse) return mlat::cmd_parse(chain, opts, out);
    if (*merge) return mlat::cmd_merge(require_workspace(workspace), g, h, emit_complex, opts, out);
    if (*betti && !complex_path.empty()) {
      return mlat::cmd_betti_complex(mlat::load_complex(complex_path), opts, out);
    }
    if (*betti) return mlat::cmd_betti(require_workspace(workspace), optional_arg(chain), opts, out);
    if (*filtrate) {
      return mlat::cmd_filtrate(require_workspace(workspace), optional_arg(chain), fixed_order,
                                opts, out);
    }
    if (*lattice) {
      if (workspace.empty()) return mlat::cmd_lattice(mlat::default_atoms(k), opts, out);
      const auto ws = mlat::load_workspace(workspace);
      return mlat::cmd_lattice(mlat::parse_chain_expr(mlat::default_chain(ws)).atoms(), opts, out);
    }
    if (*laws) {
      if (workspace.empty()) return mlat::cmd_check_laws(nullptr, k, opts, out);
      const auto ws = mlat::load_workspace(workspace);
      return mlat::cmd_check_laws(&ws, k, opts, out);
    }
    if (*incremental) {
      if (reference) return mlat::cmd_reference_cases(opts, out);
      if (g.empty() || h.empty()) throw mlat::UsageError("incremental needs two graph names");
      return mlat::cmd_incremental(require_workspace(workspace), g, h, opts, out);
    }
    if (*fuzz) {
      if (summary_path.empty()) return mlat::cmd_fuzz(count, opts, out, std::cerr);
      std::ofstream summary(summary_path);
      if (!summary) throw mlat::UsageError("cannot write " + summary_path);
      return mlat::cmd_fuzz(count, opts, out, summary);
    }
  } catch (const mlat::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return mlat::exit_code::usage;
  } catch (const mlat::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == mlat::ErrorKind::LawViolation ? mlat::exit_code::law_violation
                                                     : mlat::exit_code::domain;
  }
  return mlat::exit_code::usage;
}
