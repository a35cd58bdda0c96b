#include "mlat/incremental.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "mlat/error.hpp"

namespace mlat {

BettiVector incremental_step(BettiVector beta, std::size_t d, bool closes_cycle) {
  if (beta.values.size() < d + 1) beta.values.resize(d + 1, 0);
  if (closes_cycle) {
    ++beta.values[d];
    return beta;
  }
  if (d == 0 || beta.values[d - 1] == 0) {
    throw Error(ErrorKind::NegativeBetti, "non-closing " + std::to_string(d) +
                                              "-cell would make beta_" +
                                              std::to_string(d == 0 ? 0 : d - 1) + " negative");
  }
  --beta.values[d - 1];
  return beta;
}

long formula_beta1(const IncrementalParams& p) {
  return std::max(p.beta_g, p.beta_h) + std::max(p.n_g, p.n_h) - std::min(p.p_g, p.p_h) - p.cl;
}

long formula_beta2(const IncrementalParams& p) {
  return std::max(p.beta_g, p.beta_h) + std::max(p.n_g, p.n_h) - std::min(p.p_g, p.p_h) - p.cl +
         p.dup;
}

CellReplay::CellReplay(const Multicomplex& ambient) : ambient_(&ambient) {
  const auto dims = static_cast<std::size_t>(std::max(ambient.dimension() + 1, 0));
  present_.resize(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    present_[d].assign(ambient.cell_count(d), false);
    bases_.emplace_back(d == 0 ? 0 : ambient.cell_count(d - 1));
  }
}

bool CellReplay::contains(const CellRef& ref) const {
  auto i = ambient_->index_of(ref);
  return i && present_[ref.dimension()][*i];
}

bool CellReplay::add(const CellRef& ref) {
  auto i = ambient_->index_of(ref);
  if (!i) throw Error(ErrorKind::MalformedComplex, "replayed cell is not in the complex");
  const auto d = ref.dimension();
  if (present_[d][*i]) throw Error(ErrorKind::MalformedComplex, "cell replayed twice");

  bool closes = true;
  if (d > 0) {
    BitVector column(ambient_->cell_count(d - 1));
    for (const auto& face : multiboundary(ambient_->cells(d)[*i])) {
      auto fi = ambient_->index_of(face);
      if (!present_[d - 1][*fi]) {
        throw Error(ErrorKind::MalformedComplex, "cell replayed before one of its faces");
      }
      column.flip(*fi);
    }
    closes = !bases_[d].insert(std::move(column));
  }
  present_[d][*i] = true;
  beta_ = incremental_step(std::move(beta_), d, closes);
  return closes;
}

std::vector<CellRef> canonical_order(const Multicomplex& x) {
  std::vector<CellRef> out;
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const auto& c : x.cells(static_cast<std::size_t>(d))) out.push_back(c.id);
  }
  return out;
}

BettiVector replay_betti(const Multicomplex& x, const std::vector<CellRef>& order) {
  CellReplay replay(x);
  for (const auto& ref : order) replay.add(ref);
  return replay.betti();
}

namespace {

enum class Origin { G, H, Both, Created };

/// Which operand owns each cell of the merged complex, judged by the edge
/// copies it is built from: copies 1..m_G(e) come from G, the rest from H.
std::map<CellRef, Origin> attribute_cells(const Multicomplex& merged, const Multigraph& g,
                                          const Multigraph& h) {
  std::map<CellRef, Origin> origin;
  for (const auto& c : merged.cells(0)) {
    const auto v = c.id.vertices.front();
    const bool in_g = g.nodes().contains(v);
    const bool in_h = h.nodes().contains(v);
    origin[c.id] = in_g && in_h ? Origin::Both : in_g ? Origin::G : Origin::H;
  }
  for (const auto& c : merged.cells(1)) {
    const auto mg = g.multiplicity(EdgeKey{c.id.vertices[0], c.id.vertices[1]});
    origin[c.id] = c.id.copy <= mg ? Origin::G : Origin::H;
  }
  for (int d = 2; d <= merged.dimension(); ++d) {
    for (const auto& c : merged.cells(static_cast<std::size_t>(d))) {
      bool all_g = true;
      bool all_h = true;
      for (const auto& f : c.faces) {
        const auto o = origin.at(f);
        all_g = all_g && (o == Origin::G || o == Origin::Both);
        all_h = all_h && (o == Origin::H || o == Origin::Both);
      }
      origin[c.id] = all_g ? Origin::G : all_h ? Origin::H : Origin::Created;
    }
  }
  return origin;
}

bool owned_by(Origin o, Origin side) { return o == side || o == Origin::Both; }

/// Replays the other operand's cells, then this operand's remaining ones;
/// returns (closing, non-closing) counts among the latter in dimension d.
std::pair<long, long> classify_contribution(const Multicomplex& merged,
                                            const std::map<CellRef, Origin>& origin,
                                            Origin side, Origin other, std::size_t d) {
  CellReplay replay(merged);
  const auto order = canonical_order(merged);
  for (const auto& ref : order) {
    if (owned_by(origin.at(ref), other)) replay.add(ref);
  }
  long closing = 0;
  long opening = 0;
  for (const auto& ref : order) {
    const auto o = origin.at(ref);
    if (o != side) continue;
    const bool closes = replay.add(ref);
    if (ref.dimension() == d) ++(closes ? closing : opening);
  }
  return {closing, opening};
}

}  // namespace

IncrementalParams extract_params(const Multigraph& g, const Multigraph& h, std::size_t d,
                                 CellPolicy policy) {
  const auto kg = clique_multicomplex(g, policy);
  const auto kh = clique_multicomplex(h, policy);
  const auto merged = clique_multicomplex(merge(g, h), policy);
  const auto origin = attribute_cells(merged, g, h);

  IncrementalParams p;
  p.dimension = d;
  p.beta_g = static_cast<long>(betti(kg).at(d));
  p.beta_h = static_cast<long>(betti(kh).at(d));
  std::tie(p.n_g, p.p_g) = classify_contribution(merged, origin, Origin::G, Origin::H, d);
  std::tie(p.n_h, p.p_h) = classify_contribution(merged, origin, Origin::H, Origin::G, d);

  // Created cells are replayed on top of both operands; a created (d+1)-cell
  // that does not close a cycle fills a d-cycle.
  CellReplay replay(merged);
  const auto order = canonical_order(merged);
  for (const auto& ref : order) {
    if (origin.at(ref) != Origin::Created) replay.add(ref);
  }
  for (const auto& ref : order) {
    if (origin.at(ref) != Origin::Created) continue;
    const bool closes = replay.add(ref);
    if (ref.dimension() == d + 1 && !closes) ++p.cl;
  }

  const auto before = duplications(kg, d) + duplications(kh, d);
  const auto after = duplications(merged, d);
  assert(after >= before);
  p.dup = static_cast<long>(after) - static_cast<long>(before);
  return p;
}

IncrementalReport validate(const Multigraph& g, const Multigraph& h, CellPolicy policy) {
  IncrementalReport r;
  r.params1 = extract_params(g, h, 1, policy);
  r.params2 = extract_params(g, h, 2, policy);
  r.formula_beta1 = formula_beta1(r.params1);
  r.formula_beta2 = formula_beta2(r.params2);
  const auto oracle = betti(clique_multicomplex(merge(g, h), policy));
  r.oracle_beta1 = oracle.at(1);
  r.oracle_beta2 = oracle.at(2);
  r.agrees1 = r.formula_beta1 == static_cast<long>(r.oracle_beta1);
  r.agrees2 = r.formula_beta2 == static_cast<long>(r.oracle_beta2);
  return r;
}

std::vector<ReferenceCase> reference_cases() {
  auto make = [](std::size_t d, long bg, long bh, long ng, long pg, long nh, long ph, long cl,
                 long dup) {
    IncrementalParams p;
    p.dimension = d;
    p.beta_g = bg;
    p.beta_h = bh;
    p.n_g = ng;
    p.p_g = pg;
    p.n_h = nh;
    p.p_h = ph;
    p.cl = cl;
    p.dup = dup;
    return p;
  };
  return {
      {"A", make(1, 1, 0, 0, 1, 0, 1, 0, 0), 1},
      {"A", make(2, 0, 0, 0, 2, 0, 1, 0, 1), 0},
      {"B", make(1, 1, 0, 2, 0, 1, 1, 1, 0), 1},
      {"B", make(2, 0, 0, 0, 0, 0, 0, 0, 1), 1},
      {"C", make(1, 1, 0, 2, 0, 0, 0, 2, 0), 1},
      {"C", make(2, 0, 0, 0, 0, 2, 0, 2, 1), 1},
  };
}

std::vector<FormulaFinding> check_reference_cases() {
  std::vector<FormulaFinding> out;
  for (const auto& c : reference_cases()) {
    FormulaFinding f;
    f.name = c.name;
    f.dimension = c.params.dimension;
    f.formula = c.params.dimension == 1 ? formula_beta1(c.params) : formula_beta2(c.params);
    f.stated = c.stated;
    f.discrepancy = f.formula != f.stated;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace mlat
