#ifndef QCG_RESIDUES_HPP
#define QCG_RESIDUES_HPP

#include <string>
#include <vector>

#include "qcg/qring.hpp"

namespace qcg {

// Everything needed to evaluate the total residue of the quantum relation
// system: the Jacobian class, the top monomial projection, and the
// normalization against the paper's volume-form representative
// F_Omega = (-1)^{n-k} X_k^{n-k}.
struct ResidueContext {
  const QuantumModel* model = nullptr;
  WPolynomial jac;      // det(d f_i / d X_j), rows in the Y_{n-k+i} order
  Monomial m_top;       // unique top-weight basis monomial
  Rational j_top = 0;   // coefficient of m_top in NF(jac); q-free, nonzero
  int top_weight = 0;   // N = k(n-k)
  WPolynomial f_omega;
  Rational c = 0;       // 1 / Res(F_Omega)
};

// Exact Jacobian determinant det(d f_i / d X_j) of a square relation system.
WPolynomial jacobian(const RelationSystem& sys);

// Builds the residue context; fails if the Jacobian misses the top class
// or Res(F_Omega) = 0 (either would contradict Poincare duality).
ResidueContext build_residue_context(const QuantumModel& model);

// Total residue via the projection formula
//   Res(F) = dim * (coefficient of m_top in NF(F)) / j_top.
// In formal mode the result is a polynomial in q (a forced monomial for
// homogeneous F); in specialized mode it is a constant.
QPolynomial total_residue(const WPolynomial& f, const ResidueContext& ctx);

struct TraceCheck {
  bool equal = false;
  QPolynomial trace;
  QPolynomial residue;
};

// tr(mult_operator(F)) against Res(F * Jac); must agree exactly.
TraceCheck trace_residue_check(const WPolynomial& f, const ResidueContext& ctx);

// c = 1 / Res(F_Omega) as an exact rational (fatal if the residue is 0).
Rational normalization_c(const ResidueContext& ctx);

// Model-wise empirical sign reconciliation between the residue pipeline and
// the exact handle-element pipeline:
//   <F>_g = c * s0 * s1^g * Res(Jac^g * F).
// s1 is the genus exponent base; s0 is a constant factor that differs from
// +1 exactly when the paper's F_Omega formula represents the negative of
// the point class (k even and n-k odd).  Both are measured on probes and
// verified; inconsistency raises an error carrying the probe table.
struct SignReconciliation {
  int constant_sign = 1; // s0
  int genus_sign = 1;    // s1
  std::vector<std::string> probes;
};

SignReconciliation reconcile_signs(const ResidueContext& ctx, int genus_max = 3);

struct GenusResidueValue {
  QPolynomial raw;        // c * Res(Jac^g * F)
  QPolynomial reconciled; // c * s0 * s1^g * Res(Jac^g * F)
};

GenusResidueValue genus_invariant_residue(const WPolynomial& f, int genus,
                                          const ResidueContext& ctx,
                                          const SignReconciliation& signs);

} // namespace qcg

#endif
