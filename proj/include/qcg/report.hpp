#ifndef QCG_REPORT_HPP
#define QCG_REPORT_HPP

#include "qcg/json_io.hpp"
#include "qcg/lgmodel.hpp"

namespace qcg {

// Per-model sign bookkeeping: the computed normalization c, the measured
// reconciliation pair (s0, s1), the Hessian/Jacobian row-reversal sign, and
// the comparison against the paper's closed-form prefactor
// (-1)^{n + k(k-1)/2}.  Disagreement with the paper is recorded as a
// finding, not a failure.
struct ModelSignReport {
  int k = 0, n = 0;
  std::string c;
  int constant_sign = 1;       // s0
  int genus_sign = 1;          // s1
  int hessian_alignment = 1;   // (-1)^{k(k-1)/2}
  int paper_prefactor = 1;     // (-1)^{n + k(k-1)/2}
  bool constant_matches_paper = false; // c * s0 == (-1)^n
  bool genus_matches_paper = false;    // s1 == (-1)^{k(k-1)/2}
  std::vector<std::string> probes;
};

ModelSignReport sign_report_for(const QuantumModel& model, const ResidueContext& ctx,
                                const SignReconciliation& signs);
Json sign_report_json(const ModelSignReport& r);

// Runs every verification suite over 1 <= k <= kmax < n <= nmax: ring
// selfcheck, residue invariants, trace identity on seeded random inputs,
// Landau-Ginzburg consistency, sign reconciliation, and a cross-pipeline
// sample.  The report carries schema "qcg-report/1".
struct SelftestOutcome {
  bool passed = false;
  int checks = 0;
  int failures = 0;
  Json report;
};

SelftestOutcome run_selftest(int kmax, int nmax, uint64_t seed, bool corrupt,
                             unsigned digits = 60);

} // namespace qcg

#endif
