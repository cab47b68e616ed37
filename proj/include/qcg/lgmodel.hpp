#ifndef QCG_LGMODEL_HPP
#define QCG_LGMODEL_HPP

#include <vector>

#include "qcg/complexmp.hpp"
#include "qcg/residues.hpp"

namespace qcg {

// One point of the Landau-Ginzburg critical locus.
struct CriticalPoint {
  std::vector<Complex> roots; // Chern roots z_1..z_k, canonically sorted
  std::vector<Complex> x;     // X-coordinates via the Sigma map
  Complex jac_value;          // symbolic determinant of the aligned system, evaluated
  Complex hess_value;         // numeric determinant of the evaluated Hessian matrix
};

// The full critical locus of W^[omega] at one q value, plus the data shared
// by Vafa-Intriligator sums.
struct CriticalSystem {
  GrassSpec spec;
  Complex q;
  unsigned digits = 60;
  std::vector<CriticalPoint> points;
  Real max_residual{0};    // largest |f_i(x)| over points and relations
  Real min_separation{0};  // smallest pairwise coordinate distance
  Real min_hessian{0};     // smallest |hess_value|
};

// Signs carried into the Vafa-Intriligator sum: the residue normalization c
// and the empirical reconciliation transported through the Hessian/Jacobian
// row alignment (the aligned determinants differ by (-1)^{k(k-1)/2}).
struct ViSigns {
  Rational c = 1;
  int constant_sign = 1;
  int genus_sign = 1;
};

ViSigns vi_signs(const ResidueContext& ctx, const SignReconciliation& signs);

// Evaluate a polynomial at a critical point (q taken from the system).
Complex eval_poly(const WPolynomial& f, const std::vector<Complex>& x, const Complex& q);

// Enumerates the C(n,k) critical points as k-subsets (colexicographic) of
// the n-th roots of rho = (-1)^{k+1} q.  Certifies the defining residuals,
// non-degeneracy, pairwise separation and the Hessian/Jacobian identity at
// the working precision; throws PrecisionError when certification fails.
CriticalSystem critical_points(const GrassSpec& spec, const Complex& q_value,
                               unsigned digits = 60);

// c * s0 * s1^g * sum_x hess(x)^{g-1} F(x); PrecisionError when the
// imaginary part survives above tolerance for real data.
Complex vi_sum(const WPolynomial& f, int genus, const CriticalSystem& sys, const ViSigns& signs);

// Exact reconstruction of <F>_g as an integer polynomial in q from
// Vafa-Intriligator sums at integer q samples.  sample_count < 0 picks
// degree bound + 2 automatically; escalates precision once before failing.
QPolynomial reconstruct_q_polynomial(const WPolynomial& f, int genus, const GrassSpec& spec,
                                     const ViSigns& signs, int sample_count = -1,
                                     unsigned digits = 60);

// Sweep variant sharing critical systems and power tables across all
// monomials of weight <= weight_bound and genus <= genus_max.
std::vector<std::pair<Monomial, std::vector<QPolynomial>>> vi_reconstruct_sweep(
    const GrassSpec& spec, const ViSigns& signs, long weight_bound, int genus_max,
    unsigned digits = 60);

// Symbolic verification of the Landau-Ginzburg description: the reversed
// relation list is a gradient (symmetric mixed partials), its potential
// reproduces every relation exactly, the aligned Jacobian matches
// (-1)^{k(k-1)/2} times the residue Jacobian, and the closed form of
// W restricted to Chern roots holds at random points.
struct LgConsistency {
  bool ok = false;
  WPolynomial potential; // W^[omega] with zero constant term
  std::vector<std::string> notes;
};

LgConsistency lg_consistency(const GrassSpec& spec, unsigned digits = 60, uint64_t seed = 1);

} // namespace qcg

#endif
