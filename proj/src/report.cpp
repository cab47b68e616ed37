#include "qcg/report.hpp"

#include <random>

namespace qcg {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

WPolynomial random_poly(std::mt19937_64& rng, int nvars) {
  std::vector<WPolynomial::Term> terms;
  int count = 1 + int(rng() % 5);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    for (int i = 0; i < nvars; ++i) m.x[size_t(i)] = uint16_t(rng() % 4);
    m.q = uint32_t(rng() % 2);
    terms.push_back({m, Rational(long(rng() % 19) - 9)});
  }
  return WPolynomial::from_terms(nvars, std::move(terms));
}

} // namespace

ModelSignReport sign_report_for(const QuantumModel& model, const ResidueContext& ctx,
                                const SignReconciliation& signs) {
  ModelSignReport r;
  r.k = model.spec().k;
  r.n = model.spec().n;
  r.c = rational_string(ctx.c);
  r.constant_sign = signs.constant_sign;
  r.genus_sign = signs.genus_sign;
  r.hessian_alignment = parity_sign(long(r.k) * (r.k - 1) / 2);
  r.paper_prefactor = parity_sign(r.n + long(r.k) * (r.k - 1) / 2);
  r.constant_matches_paper = (ctx.c * signs.constant_sign == Rational(parity_sign(r.n)));
  r.genus_matches_paper = (signs.genus_sign == r.hessian_alignment);
  r.probes = signs.probes;
  return r;
}

Json sign_report_json(const ModelSignReport& r) {
  Json j = Json::object();
  j["k"] = r.k;
  j["n"] = r.n;
  j["c"] = r.c;
  j["constant_sign"] = r.constant_sign;
  j["genus_sign"] = r.genus_sign;
  j["hessian_alignment"] = r.hessian_alignment;
  j["paper_prefactor"] = r.paper_prefactor;
  j["constant_matches_paper"] = r.constant_matches_paper;
  j["genus_matches_paper"] = r.genus_matches_paper;
  j["probes"] = r.probes;
  return j;
}

SelftestOutcome run_selftest(int kmax, int nmax, uint64_t seed, bool corrupt, unsigned digits) {
  SelftestOutcome out;
  out.report = Json::object();
  out.report["schema"] = "qcg-report/1";
  out.report["kmax"] = kmax;
  out.report["nmax"] = nmax;
  out.report["seed"] = seed;
  out.report["corrupt"] = corrupt;
  Json models = Json::array();
  Json sign_reports = Json::array();

  int checks = 0, failures = 0;
  for (int n = 2; n <= nmax; ++n) {
    for (int k = 1; k <= kmax && k < n; ++k) {
      GrassSpec spec(k, n);
      Json mj = Json::object();
      mj["k"] = k;
      mj["n"] = n;
      std::vector<std::string> errors;
      auto record = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
          ++failures;
          errors.push_back(what);
        }
      };
      try {
        QuantumModel model(spec, QMode::formal, Rational(0), corrupt);
        record(Integer(model.dimension()) == spec.rank(), "dimension != C(n,k)");

        SelfcheckReport rc = ring_selfcheck(model, seed, 100);
        checks += rc.checks;
        if (!rc.passed) {
          failures += int(rc.failures.size());
          for (const auto& f : rc.failures) errors.push_back(f);
        }
        mj["ring_checks"] = rc.checks;
        mj["ring_notes"] = rc.notes;

        ResidueContext ctx = build_residue_context(model);
        record(total_residue(ctx.jac, ctx) == QPolynomial(Rational(model.dimension())),
               "Res(Jac) != dim");
        const GroebnerModel& gm = model.groebner();
        bool vanish = true;
        for (int b = 0; b < gm.dimension; ++b) {
          if (gm.basis_weight(b) >= ctx.top_weight) continue;
          WPolynomial mono = WPolynomial::monomial(k, gm.quotient_basis[size_t(b)], Rational(1));
          if (!total_residue(mono, ctx).is_zero()) vanish = false;
        }
        record(vanish, "residue fails to vanish below the top weight");

        std::mt19937_64 rng(seed + uint64_t(1000 * k + n));
        bool traces = true;
        for (int t = 0; t < 20; ++t)
          if (!trace_residue_check(random_poly(rng, k), ctx).equal) traces = false;
        record(traces, "trace identity tr(mu_F) = Res(F*Jac) failed");

        SignReconciliation signs = reconcile_signs(ctx);
        sign_reports.push_back(sign_report_json(sign_report_for(model, ctx, signs)));

        LgConsistency lg = lg_consistency(spec, digits, seed);
        record(lg.ok, "Landau-Ginzburg consistency failed");

        // cross-pipeline sample: all three pipelines on the Euler probe and
        // one monomial
        ViSigns vs = vi_signs(ctx, signs);
        WPolynomial one = WPolynomial::constant(k, Rational(1));
        QPolynomial euler_exact = genus_invariant_exact(one, 1, model);
        QPolynomial euler_res = genus_invariant_residue(one, 1, ctx, signs).reconciled;
        QPolynomial euler_vi = reconstruct_q_polynomial(one, 1, spec, vs, -1, digits);
        record(euler_exact == QPolynomial(Rational(binomial(n, k))), "<1>_1 != C(n,k) (exact)");
        record(euler_res == euler_exact, "<1>_1 mismatch (residue)");
        record(euler_vi == euler_exact, "<1>_1 mismatch (Vafa-Intriligator)");

        WPolynomial probe = WPolynomial::variable(k, k - 1, spec.box_width());
        for (int g = 0; g <= 2; ++g) {
          QPolynomial e = genus_invariant_exact(probe, g, model);
          record(genus_invariant_residue(probe, g, ctx, signs).reconciled == e,
                 "pipeline mismatch (residue) at g=" + std::to_string(g));
          record(reconstruct_q_polynomial(probe, g, spec, vs, -1, digits) == e,
                 "pipeline mismatch (vi) at g=" + std::to_string(g));
        }

        CriticalSystem sys = critical_points(spec, Complex(Rational(1)), digits);
        record(Integer(sys.points.size()) == spec.rank(), "critical point count != C(n,k)");
      } catch (const Error& e) {
        record(false, std::string("exception: ") + e.what());
      }
      mj["errors"] = errors;
      mj["passed"] = errors.empty();
      models.push_back(std::move(mj));
    }
  }
  out.report["models"] = std::move(models);
  out.report["sign_reconciliation"] = std::move(sign_reports);
  out.checks = checks;
  out.failures = failures;
  out.passed = failures == 0;
  out.report["checks"] = checks;
  out.report["failures"] = failures;
  out.report["passed"] = out.passed;
  return out;
}

} // namespace qcg
