#include "qcg/residues.hpp"

namespace qcg {

WPolynomial jacobian(const RelationSystem& sys) {
  const int k = sys.spec.k;
  if (int(sys.relations.size()) != k) throw UsageError("relation system is not square");
  std::vector<std::vector<WPolynomial>> mat(static_cast<size_t>(k),
                                            std::vector<WPolynomial>(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mat[size_t(i)][size_t(j)] = sys.relations[size_t(i)].derivative(j);
  return poly_determinant(mat, k);
}

ResidueContext build_residue_context(const QuantumModel& model) {
  ResidueContext ctx;
  ctx.model = &model;
  const GrassSpec& spec = model.spec();
  ctx.top_weight = spec.dimension();
  ctx.jac = jacobian(model.system());

  const GroebnerModel& gm = model.groebner();
  ctx.m_top = gm.top_monomial;
  WPolynomial nf_jac = gm.normal_form(ctx.jac);
  QPolynomial jt = nf_jac.q_coefficient(ctx.m_top);
  if (!jt.is_constant() || jt.is_zero())
    throw InconsistencyError("Jacobian does not span the top graded piece");
  ctx.j_top = jt.constant_value();

  Rational sign = (spec.box_width() % 2 == 0) ? 1 : -1; // (-1)^{n-k}
  ctx.f_omega =
      WPolynomial::monomial(spec.k, Monomial::var(spec.k - 1, spec.box_width()), sign);
  ctx.c = normalization_c(ctx);
  return ctx;
}

QPolynomial total_residue(const WPolynomial& f, const ResidueContext& ctx) {
  const GroebnerModel& gm = ctx.model->groebner();
  QPolynomial top = gm.normal_form(f).q_coefficient(ctx.m_top);
  return top * (Rational(gm.dimension) / ctx.j_top);
}

TraceCheck trace_residue_check(const WPolynomial& f, const ResidueContext& ctx) {
  TraceCheck out;
  out.trace = ctx.model->groebner().mult_operator(f).trace();
  out.residue = total_residue(f * ctx.jac, ctx);
  out.equal = out.trace == out.residue;
  return out;
}

Rational normalization_c(const ResidueContext& ctx) {
  QPolynomial r = total_residue(ctx.f_omega, ctx);
  if (!r.is_constant())
    throw InconsistencyError("Res(F_Omega) is not q-free");
  Rational v = r.constant_value();
  if (v == 0) throw InconsistencyError("Res(F_Omega) = 0 contradicts Poincare duality");
  return Rational(1) / v;
}

namespace {

// Exact value and residue value of one probe; the ratio must be a sign.
struct Probe {
  std::string name;
  WPolynomial f;
  int genus;
};

} // namespace

SignReconciliation reconcile_signs(const ResidueContext& ctx, int genus_max) {
  const QuantumModel& model = *ctx.model;
  const GrassSpec& spec = model.spec();
  SignReconciliation signs;

  WPolynomial one = WPolynomial::constant(spec.k, Rational(1));
  WPolynomial pt = model.schur().schur_poly(model.full_box());
  std::vector<Probe> probes = {
      {"F_Omega g=0", ctx.f_omega, 0},
      {"1 g=1", one, 1},
      {"point g=0", pt, 0},
      {"point g=1", pt, 1},
      {"F_Omega g=2", ctx.f_omega, 2},
  };
  for (int g = 2; g <= genus_max; ++g) probes.push_back({"1 g=" + std::to_string(g), one, g});

  // Measure s0 at genus 0 and s1 at genus 1, then verify every probe.
  auto raw_value = [&](const Probe& p) {
    WPolynomial jg = one;
    for (int g = 0; g < p.genus; ++g) jg = model.groebner().normal_form(jg * ctx.jac);
    return total_residue(jg * p.f, ctx) * ctx.c;
  };

  QPolynomial exact0 = genus_invariant_exact(ctx.f_omega, 0, model);
  QPolynomial raw0 = raw_value(probes[0]); // = 1 by normalization
  if (!(exact0 == raw0 || exact0 == -raw0))
    throw InconsistencyError("sign reconciliation failed at genus 0: exact " + exact0.str() +
                             " vs raw " + raw0.str());
  signs.constant_sign = (exact0 == raw0) ? 1 : -1;

  QPolynomial exact1 = genus_invariant_exact(one, 1, model);
  QPolynomial raw1 = raw_value(probes[1]);
  QPolynomial signed1 = raw1 * Rational(signs.constant_sign);
  if (!(exact1 == signed1 || exact1 == -signed1))
    throw InconsistencyError("sign reconciliation failed at genus 1: exact " + exact1.str() +
                             " vs " + signed1.str());
  signs.genus_sign = (exact1 == signed1) ? 1 : -1;

  bool all_ok = true;
  for (const auto& p : probes) {
    QPolynomial exact = genus_invariant_exact(p.f, p.genus, model);
    Rational factor(signs.constant_sign);
    for (int g = 0; g < p.genus; ++g) factor *= signs.genus_sign;
    QPolynomial reconciled = raw_value(p) * factor;
    bool ok = exact == reconciled;
    all_ok = all_ok && ok;
    signs.probes.push_back(p.name + ": exact=" + exact.str() + " reconciled=" + reconciled.str() +
                           (ok ? " ok" : " MISMATCH"));
  }
  if (!all_ok) {
    std::string table;
    for (const auto& line : signs.probes) table += "\n  " + line;
    throw InconsistencyError("no consistent sign reconciliation found on probes:" + table);
  }
  return signs;
}

GenusResidueValue genus_invariant_residue(const WPolynomial& f, int genus,
                                          const ResidueContext& ctx,
                                          const SignReconciliation& signs) {
  if (genus < 0) throw UsageError("negative genus");
  const GroebnerModel& gm = ctx.model->groebner();
  WPolynomial acc = gm.normal_form(f);
  for (int g = 0; g < genus; ++g) acc = gm.normal_form(acc * ctx.jac);
  GenusResidueValue out;
  out.raw = total_residue(acc, ctx) * ctx.c;
  Rational factor(signs.constant_sign);
  for (int g = 0; g < genus; ++g) factor *= signs.genus_sign;
  out.reconciled = out.raw * factor;
  return out;
}

} // namespace qcg
