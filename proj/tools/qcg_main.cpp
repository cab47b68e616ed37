// qcg: exact quantum cohomology of Grassmannians from the command line.
//
// Conventions: X_i is the i-th Chern class of the tautological bundle S on
// G(k,n); the Schubert class sigma_1 (ample generator) is -X_1; q stands
// for e^{-[omega](L)} and carries weight n.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical inconsistency,
// 3 precision failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qcg/json_io.hpp"
#include "qcg/parser.hpp"
#include "qcg/report.hpp"

namespace {

using namespace qcg;

struct CommonOptions {
  int k = 0, n = 0;
  std::string q = "formal";
  unsigned precision = 60;
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_spec = true) {
  if (needs_spec) {
    cmd->add_option("--k", opt.k, "subspace dimension k")->required();
    cmd->add_option("--n", opt.n, "ambient dimension n")->required();
  }
  cmd->add_option("--q", opt.q, "deformation parameter: 'formal' or a rational value");
  unsigned default_precision = 60;
  if (const char* env = std::getenv("QCG_PRECISION")) default_precision = unsigned(std::atoi(env));
  opt.precision = default_precision;
  cmd->add_option("--precision", opt.precision, "working precision in decimal digits");
  cmd->add_option("--out", opt.out, "write the result to a file instead of stdout");
  cmd->add_flag("--timing", opt.timing, "include wall-clock timing in the output");
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot parse rational value: " + s);
  }
}

void emit(const CommonOptions& opt, QueryResult result, double elapsed_ms) {
  if (opt.timing) result.root["timing_ms"] = elapsed_ms;
  std::string text = result.serialize();
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + opt.out);
    f << text;
  }
}

Json spec_query(const CommonOptions& opt) {
  Json q = Json::object();
  q["k"] = opt.k;
  q["n"] = opt.n;
  q["q_mode"] = opt.q;
  q["precision"] = opt.precision;
  return q;
}

QuantumModel model_for(const CommonOptions& opt) {
  GrassSpec spec(opt.k, opt.n);
  if (opt.q == "formal") return QuantumModel(spec);
  return QuantumModel(spec, QMode::specialized, parse_rational(opt.q));
}

int run_product(const CommonOptions& opt, const std::string& a, const std::string& b) {
  auto t0 = std::chrono::steady_clock::now();
  QuantumModel model = model_for(opt);
  SchubertVector va = model.unit_class(parse_partition(a));
  SchubertVector vb = model.unit_class(parse_partition(b));
  SchubertVector prod = quantum_product(va, vb, model);
  Json query = spec_query(opt);
  query["a"] = parse_partition(a).key();
  query["b"] = parse_partition(b).key();
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(opt, make_result("product", query, "exact", schubert_vector_to_json(prod)), ms);
  return 0;
}

int run_gw3(const CommonOptions& opt, const std::string& a, const std::string& b,
            const std::string& c, int d) {
  auto t0 = std::chrono::steady_clock::now();
  GrassSpec spec(opt.k, opt.n);
  QuantumModel model(spec);
  Integer value = gw3(parse_partition(a), parse_partition(b), parse_partition(c), d, model);
  Json query = spec_query(opt);
  query["a"] = parse_partition(a).key();
  query["b"] = parse_partition(b).key();
  query["c"] = parse_partition(c).key();
  query["d"] = d;
  Json payload = Json::object();
  payload["value"] = value.str();
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(opt, make_result("gw3", query, "exact", std::move(payload)), ms);
  return 0;
}

int run_invariant(const CommonOptions& opt, int genus, const std::string& poly,
                  const std::string& method) {
  auto t0 = std::chrono::steady_clock::now();
  GrassSpec spec(opt.k, opt.n);
  if (opt.q != "formal")
    throw UsageError("invariants are computed with formal q; evaluate the result afterwards");
  WPolynomial f = parse_polynomial(poly, spec.k);
  QuantumModel model(spec);

  bool want_exact = method == "exact" || method == "all";
  bool want_residue = method == "residue" || method == "all";
  bool want_vi = method == "vi" || method == "all";
  if (!(want_exact || want_residue || want_vi))
    throw UsageError("unknown method: " + method + " (expected exact|residue|vi|all)");

  Json payload = Json::object();
  QPolynomial exact, residue_val, vi_val;
  if (want_exact) {
    exact = genus_invariant_exact(f, genus, model);
    payload["exact"] = qpolynomial_to_json(exact);
  }
  if (want_residue || want_vi) {
    ResidueContext ctx = build_residue_context(model);
    SignReconciliation signs = reconcile_signs(ctx);
    if (want_residue) {
      GenusResidueValue v = genus_invariant_residue(f, genus, ctx, signs);
      residue_val = v.reconciled;
      payload["residue"] = qpolynomial_to_json(v.reconciled);
      payload["residue_raw"] = qpolynomial_to_json(v.raw);
    }
    if (want_vi) {
      vi_val = reconstruct_q_polynomial(f, genus, spec, vi_signs(ctx, signs), -1, opt.precision);
      payload["vi"] = qpolynomial_to_json(vi_val);
    }
  }
  if (method == "all") {
    bool agree = exact == residue_val && exact == vi_val;
    payload["agreement"] = agree;
    if (!agree)
      throw InconsistencyError("pipelines disagree on <" + poly + ">_" + std::to_string(genus));
  }
  Json query = spec_query(opt);
  query["genus"] = genus;
  query["poly"] = poly;
  query["method"] = method;
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(opt, make_result("invariant", query, method, std::move(payload)), ms);
  return 0;
}

int run_export(const CommonOptions& opt, int max_weight, const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  GrassSpec spec(opt.k, opt.n);
  QuantumModel model(spec);
  const auto& parts = model.partitions();
  if (max_weight < 0) max_weight = 3 * spec.dimension();

  if (format == "csv") {
    std::string text = "a,b,result\n";
    for (const auto& a : parts)
      for (const auto& b : parts)
        text +=
            "\"" + a.str() + "\",\"" + b.str() + "\",\"" + model.basis_product(a, b).str() + "\"\n";
    if (opt.out.empty())
      std::cout << text;
    else {
      std::ofstream f(opt.out, std::ios::binary);
      if (!f) throw UsageError("cannot open output file: " + opt.out);
      f << text;
    }
    return 0;
  }
  if (format != "json") throw UsageError("unknown format: " + format + " (expected json|csv)");

  Json products = Json::array();
  for (const auto& a : parts)
    for (const auto& b : parts) {
      Json row = Json::object();
      row["a"] = a.key();
      row["b"] = b.key();
      row["product"] = schubert_vector_to_json(model.basis_product(a, b));
      products.push_back(std::move(row));
    }
  Json constants = Json::array();
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& c : parts) {
        int total = a.size() + b.size() + c.size();
        if (total > max_weight) continue;
        if (total < spec.dimension() || (total - spec.dimension()) % spec.n != 0) continue;
        int d = (total - spec.dimension()) / spec.n;
        Integer v = gw3(a, b, c, d, model);
        if (v == 0) continue;
        Json row = Json::object();
        row["a"] = a.key();
        row["b"] = b.key();
        row["c"] = c.key();
        row["d"] = d;
        row["value"] = v.str();
        constants.push_back(std::move(row));
      }
  Json query = spec_query(opt);
  query["max_weight"] = max_weight;
  query["format"] = format;
  Json payload = Json::object();
  payload["products"] = std::move(products);
  payload["gw3"] = std::move(constants);
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(opt, make_result("export", query, "exact", std::move(payload)), ms);
  return 0;
}

int run_selftest_cmd(const CommonOptions& opt, int kmax, int nmax, uint64_t seed, bool corrupt) {
  SelftestOutcome outcome = run_selftest(kmax, nmax, seed, corrupt, opt.precision);
  std::string text = outcome.report.dump(2) + "\n";
  if (!opt.out.empty()) {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + opt.out);
    f << text;
    std::cout << (outcome.passed ? "selftest passed: " : "selftest FAILED: ") << outcome.checks
              << " checks, " << outcome.failures << " failures; report written to " << opt.out
              << "\n";
  } else {
    std::cout << text;
  }
  return outcome.passed ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum Schubert calculus on Grassmannians (X_i = c_i(S), sigma_1 = -X_1, "
               "q = e^{-omega(L)})"};
  app.require_subcommand(1);

  CommonOptions prod_opt, gw_opt, inv_opt, exp_opt, self_opt;
  std::string a, b, c, poly = "1", method = "exact", format = "json";
  int d = 0, genus = 0, max_weight = -1, kmax = 3, nmax = 7;
  uint64_t seed = 1;
  bool corrupt = false;

  CLI::App* prod = app.add_subcommand("product", "quantum product of two Schubert classes");
  add_common(prod, prod_opt);
  prod->add_option("--a", a, "first partition, e.g. 2,1")->required();
  prod->add_option("--b", b, "second partition")->required();

  CLI::App* gw = app.add_subcommand("gw3", "genus-0 three-point Gromov-Witten constant");
  add_common(gw, gw_opt);
  gw->add_option("--a", a, "first partition")->required();
  gw->add_option("--b", b, "second partition")->required();
  gw->add_option("--c", c, "third partition")->required();
  gw->add_option("--d", d, "curve degree")->required();

  CLI::App* inv = app.add_subcommand("invariant", "genus-g invariant of a polynomial class");
  add_common(inv, inv_opt);
  inv->add_option("--genus", genus, "genus g >= 0")->required();
  inv->add_option("--poly", poly, "polynomial in X1..Xk and q, e.g. \"X1^2*X2\"");
  inv->add_option("--method", method, "exact | residue | vi | all");

  CLI::App* exp = app.add_subcommand("export", "full multiplication table and gw3 constants");
  add_common(exp, exp_opt);
  exp->add_option("--max-weight", max_weight, "cap on |a|+|b|+|c| for gw3 rows");
  exp->add_option("--format", format, "json | csv");

  CLI::App* self = app.add_subcommand("selftest", "run every verification suite");
  add_common(self, self_opt, false);
  self->add_option("--kmax", kmax, "largest k");
  self->add_option("--nmax", nmax, "largest n");
  self->add_option("--seed", seed, "random seed for probe generation");
  self->add_flag("--corrupt", corrupt, "negative control: corrupt a relation and expect failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (prod->parsed()) return run_product(prod_opt, a, b);
    if (gw->parsed()) return run_gw3(gw_opt, a, b, c, d);
    if (inv->parsed()) return run_invariant(inv_opt, genus, poly, method);
    if (exp->parsed()) return run_export(exp_opt, max_weight, format);
    if (self->parsed()) return run_selftest_cmd(self_opt, kmax, nmax, seed, corrupt);
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const FormalModeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const PrecisionError& e) {
    std::cerr << "precision failure: " << e.what() << "\n";
    return 3;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
