#ifndef QCG_GROEBNER_HPP
#define QCG_GROEBNER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcg/wpoly.hpp"

namespace qcg {

enum class QMode { formal, specialized };

// Square matrix over Q[q], row-major.
struct QMatrix {
  int n = 0;
  std::vector<QPolynomial> a;

  explicit QMatrix(int size = 0) : n(size), a(size_t(size) * size_t(size)) {}
  QPolynomial& at(int i, int j) { return a[size_t(i) * size_t(n) + size_t(j)]; }
  const QPolynomial& at(int i, int j) const { return a[size_t(i) * size_t(n) + size_t(j)]; }

  QPolynomial trace() const {
    QPolynomial t;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }
};

// Column-sparse matrix over Q[q]; cols[j] holds (row, entry) pairs.
struct SparseQMatrix {
  int n = 0;
  std::vector<std::vector<std::pair<int, QPolynomial>>> cols;
};

// Finite-dimensional quotient model of an Artinian ideal: reduced basis,
// standard monomials, and the data needed for multiplication operators.
class GroebnerModel {
public:
  int nvars = 0;
  Weighting weighting;
  QMode q_mode = QMode::formal;
  Rational q_value = 0; // meaningful in specialized mode
  std::string order_name = "weighted grevlex";

  std::vector<WPolynomial> generators;
  std::vector<WPolynomial> reduced_basis;
  std::vector<Monomial> quotient_basis; // ascending term order
  int dimension = 0;

  Monomial top_monomial;   // order-maximal basis monomial of maximal weight
  bool top_unique = false; // no other basis monomial attains the top weight

  // Fully reduced normal form; linear, idempotent, F - NF(F) in the ideal.
  WPolynomial normal_form(const WPolynomial& f) const;

  // Coordinates of an already-reduced polynomial in the quotient basis.
  std::vector<QPolynomial> coordinates(const WPolynomial& reduced) const;

  int basis_index(const Monomial& m) const; // -1 when absent

  // Matrix of multiplication by F on the quotient basis.
  QMatrix mult_operator(const WPolynomial& f) const;
  SparseQMatrix mult_operator_sparse(const WPolynomial& f) const;

  long basis_weight(int i) const { return quotient_basis[size_t(i)].weight(weighting.weight_array()); }

  // Census of basis monomials by cohomological weight.
  std::vector<int> weight_census() const;

private:
  friend GroebnerModel groebner_basis(std::vector<WPolynomial>, const Weighting&, QMode,
                                      const Rational&);
  std::map<Monomial, int, decltype(&term_before)> index_{&term_before};
};

// Buchberger with the sugar selection strategy and content-free primitive
// normalization.  In formal mode every reducer must have a q-free leading
// coefficient (true for homogeneous inputs under a degree-compatible
// order); otherwise FormalModeError is thrown.  Non-Artinian input raises
// InconsistencyError("infinite quotient").
GroebnerModel groebner_basis(std::vector<WPolynomial> gens, const Weighting& w,
                             QMode mode = QMode::formal, const Rational& q_value = 0);

} // namespace qcg

#endif
