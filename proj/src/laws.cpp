#include "mlat/laws.hpp"

namespace mlat {

namespace {

std::string show(const ChainExpr& x) { return to_string(x, Notation::Ascii); }

class Checker {
 public:
  explicit Checker(std::vector<LawViolation>& out) : out_(out) {}

  void expect(bool ok, const char* law, const std::string& witness) {
    if (!ok) out_.push_back(LawViolation{law, witness});
  }

 private:
  std::vector<LawViolation>& out_;
};

}  // namespace

std::vector<LawViolation> check_lattice_laws(const std::vector<std::string>& atoms,
                                             const LatticeOps& ops) {
  std::vector<LawViolation> out;
  Checker check(out);
  const auto chains = fixed_order_chains(atoms);
  const auto one = top(atoms);
  const auto zero = bottom(atoms);
  const std::size_t gaps = atoms.size() - 1;

  for (const auto& x : chains) {
    const auto sx = show(x);
    check.expect(ops.leq(x, x), "reflexivity", sx);
    check.expect(ops.leq(x, one), "top is an upper bound", sx);
    check.expect(ops.leq(zero, x), "all-tensor chain is a lower bound", sx);
    check.expect(ops.meet(x, one) == x, "meet with top", sx);
    check.expect(ops.join(x, one) == one, "join with top", sx);
    check.expect(ops.meet(x, zero) == zero, "meet with minimal", sx);
    check.expect(ops.join(x, zero) == x, "join with minimal", sx);
    check.expect(ops.meet(x, x) == x && ops.join(x, x) == x, "idempotence", sx);

    const auto cx = ops.complement(x);
    check.expect(ops.join(x, cx) == one, "join with complement is top", sx);
    check.expect(ops.meet(x, cx) == zero, "meet with complement is minimal", sx);
    check.expect(ops.complement(cx) == x, "complement is an involution", sx);

    check.expect(ops.plus(x, one) == x && ops.plus(one, x) == x, "top is the unit of plus", sx);

    auto climbed = x;
    for (std::size_t j = 0; j <= gaps; ++j) {
      const auto fx = ops.apply_f(j, x);
      const auto sj = "f_" + std::to_string(j) + "(" + sx + ")";
      check.expect(ops.leq(x, fx), "f_j is inflationary", sj);
      check.expect(ops.apply_f(j, one) == one, "f_j fixes top", sj);
      if (j == 0) check.expect(fx == x, "f_0 is the identity", sj);
      climbed = ops.apply_f(j, climbed);
    }
    check.expect(climbed == one, "applying every f_j reaches top", sx);
  }

  for (const auto& x : chains) {
    for (const auto& y : chains) {
      const auto sxy = show(x) + " , " + show(y);
      if (ops.leq(x, y) && ops.leq(y, x)) check.expect(x == y, "antisymmetry", sxy);

      const auto m = ops.meet(x, y);
      const auto jn = ops.join(x, y);
      check.expect(ops.leq(m, x) && ops.leq(m, y), "meet is a lower bound", sxy);
      check.expect(ops.leq(x, jn) && ops.leq(y, jn), "join is an upper bound", sxy);
      check.expect(ops.meet(x, y) == ops.meet(y, x), "meet commutes", sxy);
      check.expect(ops.join(x, y) == ops.join(y, x), "join commutes", sxy);
      check.expect(ops.join(x, ops.meet(x, y)) == x, "absorption x∨(x∧y)=x", sxy);
      check.expect(ops.meet(x, ops.join(x, y)) == x, "absorption x∧(x∨y)=x", sxy);

      const auto p = ops.plus(x, y);
      const bool comparable = ops.leq(x, y) || ops.leq(y, x);
      check.expect(p.has_value() == comparable, "plus is defined iff comparable", sxy);
      check.expect(p == ops.plus(y, x), "plus commutes", sxy);
      if (p) {
        check.expect(*p == (ops.leq(x, y) ? x : y), "plus is the minimum", sxy);
      }

      for (std::size_t j = 0; j <= gaps; ++j) {
        const auto fx = ops.apply_f(j, x);
        const auto fy = ops.apply_f(j, y);
        const auto sj = "j=" + std::to_string(j) + " " + sxy;
        if (ops.leq(x, y)) check.expect(ops.leq(fx, fy), "f_j is monotone", sj);
        check.expect(ops.apply_f(j, m) == ops.meet(fx, fy), "f_j preserves meets", sj);
        check.expect(ops.apply_f(j, jn) == ops.join(fx, fy), "f_j preserves joins", sj);
        if (p) {
          const auto fp = ops.plus(fx, fy);
          check.expect(fp.has_value() && ops.apply_f(j, *p) == *fp,
                       "f_j is a partial homomorphism", sj);
        }
      }

      for (const auto& z : chains) {
        const auto sxyz = sxy + " , " + show(z);
        if (ops.leq(x, y) && ops.leq(y, z)) check.expect(ops.leq(x, z), "transitivity", sxyz);
        if (ops.leq(z, x) && ops.leq(z, y)) {
          check.expect(ops.leq(z, m), "meet is the greatest lower bound", sxyz);
        }
        if (ops.leq(x, z) && ops.leq(y, z)) {
          check.expect(ops.leq(jn, z), "join is the least upper bound", sxyz);
        }
        check.expect(ops.meet(x, ops.join(y, z)) == ops.join(ops.meet(x, y), ops.meet(x, z)),
                     "meet distributes over join", sxyz);
        check.expect(ops.join(x, ops.meet(y, z)) == ops.meet(ops.join(x, y), ops.join(x, z)),
                     "join distributes over meet", sxyz);

        const bool chain3 = ops.plus(x, y) && ops.plus(y, z) && ops.plus(x, z);
        if (!chain3) continue;
        const auto lhs = ops.plus(*ops.plus(x, y), z);
        const auto rhs = ops.plus(x, *ops.plus(y, z));
        check.expect(lhs && rhs && *lhs == *rhs, "plus is associative", sxyz);
        const auto over_join = ops.plus(x, ops.join(y, z));
        const auto join_over = [&] {
          auto a = ops.plus(x, y);
          auto b = ops.plus(x, z);
          return ops.join(*a, *b);
        }();
        check.expect(over_join && *over_join == join_over, "plus distributes over join", sxyz);
        const auto over_meet = ops.plus(x, ops.meet(y, z));
        const auto meet_over = ops.meet(*ops.plus(x, y), *ops.plus(x, z));
        check.expect(over_meet && *over_meet == meet_over, "plus distributes over meet", sxyz);
        if (ops.leq(x, y)) {
          check.expect(ops.leq(*ops.plus(x, z), *ops.plus(y, z)), "plus is order-compatible",
                       sxyz);
        }
      }
    }
  }
  return out;
}

std::vector<LawViolation> check_monoidal_laws(const Multigraph& a, const Multigraph& b,
                                              const Multigraph& c, CellPolicy policy) {
  std::vector<LawViolation> out;
  Checker check(out);
  const auto ka = clique_multicomplex(a, policy);
  const auto kb = clique_multicomplex(b, policy);
  const auto kc = clique_multicomplex(c, policy);
  const auto witness = to_string(a) + " ; " + to_string(b) + " ; " + to_string(c);

  const auto ab = complex_merge(ka, kb);
  check.expect(complex_merge(complex_merge(ka, kb), kc) == complex_merge(ka, complex_merge(kb, kc)),
               "complex merge is associative", witness);
  check.expect(braid(ab, ka) == complex_merge(kb, ka),
               "complex merge commutes through the symmetry", witness);
  check.expect(braid(braid(ab, ka), kb) == ab, "the symmetry is an involution", witness);
  const Multicomplex unit;
  check.expect(complex_merge(ka, unit) == ka && complex_merge(unit, ka) == ka,
               "empty complex is the unit", witness);
  check.expect(clique_multicomplex(merge(a, b), policy) == ab,
               "building commutes with merging", witness);
  check.expect(gluing_violations(ab).empty(), "merged complex is gluing-consistent", witness);
  return out;
}

}  // namespace mlat
