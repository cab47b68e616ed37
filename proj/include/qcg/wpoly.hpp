#ifndef QCG_WPOLY_HPP
#define QCG_WPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "qcg/monomial.hpp"
#include "qcg/qpolynomial.hpp"
#include "qcg/rational.hpp"

namespace qcg {

// The two gradings carried by every polynomial of the engine.  The
// cohomological grading gives q weight 0 (it drives initial forms); the
// homogeneous grading gives q weight n, under which the Grassmannian
// relations are homogeneous.
struct Weighting {
  std::vector<int> variable_weights;
  int q_cohomological_weight = 0;
  int q_homogeneous_weight = 0;

  static Weighting grassmannian(int k, int n) {
    Weighting w;
    w.variable_weights.resize(size_t(k));
    for (int i = 0; i < k; ++i) w.variable_weights[size_t(i)] = i + 1;
    w.q_homogeneous_weight = n;
    return w;
  }

  int nvars() const { return int(variable_weights.size()); }

  std::array<int, Monomial::kMaxVars> weight_array() const {
    std::array<int, Monomial::kMaxVars> a{};
    for (size_t i = 0; i < variable_weights.size(); ++i) a[i] = variable_weights[i];
    return a;
  }
};

// Sparse exact polynomial in X_1..X_k and q with rational coefficients.
// Terms are stored strictly sorted under term_before (leading term first),
// with no zero coefficients, so equality is structural.
class WPolynomial {
public:
  using Term = std::pair<Monomial, Rational>;

  WPolynomial() = default;
  explicit WPolynomial(int nvars) : nvars_(nvars) {}

  static WPolynomial zero(int nvars) { return WPolynomial(nvars); }

  static WPolynomial constant(int nvars, Rational c) {
    WPolynomial p(nvars);
    if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
  }

  // X_{i+1} for index i in [0, nvars).
  static WPolynomial variable(int nvars, int i, int exponent = 1) {
    WPolynomial p(nvars);
    p.terms_.push_back({Monomial::var(i, exponent), Rational(1)});
    return p;
  }

  static WPolynomial q_power(int nvars, int d, Rational c = Rational(1)) {
    WPolynomial p(nvars);
    if (c != 0) p.terms_.push_back({Monomial::q_power(uint32_t(d)), std::move(c)});
    return p;
  }

  static WPolynomial monomial(int nvars, Monomial m, Rational c) {
    WPolynomial p(nvars);
    if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const WPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const WPolynomial& o) const { return !(*this == o); }

  WPolynomial& operator+=(const WPolynomial& o);
  WPolynomial& operator-=(const WPolynomial& o);
  friend WPolynomial operator+(WPolynomial a, const WPolynomial& b) { return a += b; }
  friend WPolynomial operator-(WPolynomial a, const WPolynomial& b) { return a -= b; }
  WPolynomial operator-() const;

  friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b);
  WPolynomial& operator*=(const WPolynomial& o) { return *this = *this * o; }

  WPolynomial& scale(const Rational& s);
  WPolynomial scaled(Rational s) const {
    WPolynomial r = *this;
    r.scale(s);
    return r;
  }
  friend WPolynomial operator*(const Rational& s, WPolynomial p) {
    p.scale(s);
    return p;
  }
  friend WPolynomial operator*(WPolynomial p, const Rational& s) {
    p.scale(s);
    return p;
  }

  // this += c * X^shift * o, the elementary reduction step.
  void add_multiple(const Rational& c, const Monomial& shift, const WPolynomial& o);

  WPolynomial pow(int e) const;
  WPolynomial derivative(int var) const;

  // Replace q by a rational value.
  WPolynomial substitute_q(const Rational& value) const;

  Rational coefficient(const Monomial& m) const;

  // Coefficient of an X-monomial collected as a polynomial in q.
  QPolynomial q_coefficient(const Monomial& xpart) const;

  const Term& leading_term() const;
  // Leading X-monomial and its full q-polynomial coefficient.
  const Monomial& leading_xmonomial() const;
  QPolynomial leading_qcoefficient() const;

  long cohomological_degree(const Weighting& w) const;
  long homogeneous_degree(const Weighting& w) const;
  bool is_cohomologically_homogeneous(const Weighting& w) const;
  bool is_homogeneous(const Weighting& w) const;

  std::string str() const;

  // Construct from an unsorted term list (combines duplicates, drops zeros).
  static WPolynomial from_terms(int nvars, std::vector<Term> terms);

private:
  void normalize_terms();

  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Sum of the terms of maximal cohomological degree (q graded 0).
// Throws UsageError("no initial form of zero") on the zero polynomial.
WPolynomial initial_form(const WPolynomial& p, const Weighting& w);

// Exact determinant of a square polynomial matrix (Laplace expansion with
// memoization over column subsets).
WPolynomial poly_determinant(const std::vector<std::vector<WPolynomial>>& m, int nvars);

} // namespace qcg

#endif
