#include "doctest.h"

#include "qcg/groebner.hpp"
#include "qcg/wpoly.hpp"
#include "test_helpers.hpp"

using namespace qcg;
using qcg::testing::random_poly;

namespace {

WPolynomial X(int nvars, int i, int e = 1) { return WPolynomial::variable(nvars, i, e); }

// The G(2,4) relation pair, written out by hand from the Segre recursion.
std::vector<WPolynomial> g24_relations() {
  int nv = 2;
  // -X1^3 + 2 X1 X2
  WPolynomial f1 = -X(nv, 0, 3) + Rational(2) * (X(nv, 0) * X(nv, 1));
  // X1^4 - 3 X1^2 X2 + X2^2 + q
  WPolynomial f2 = X(nv, 0, 4) - Rational(3) * (X(nv, 0, 2) * X(nv, 1)) + X(nv, 1, 2) +
                   WPolynomial::q_power(nv, 1);
  return {f1, f2};
}

} // namespace

TEST_SUITE("wpoly") {

TEST_CASE("term order reproduces the decreed leading terms") {
  // At weight 3, X1^3 beats X1*X2; at weight 4, X1^2*X2 beats X2^2.
  Monomial a = Monomial::var(0, 3);
  Monomial b = Monomial::var(0, 1).times(Monomial::var(1, 1));
  CHECK(compare_xpart(a, b) > 0);
  Monomial c = Monomial::var(0, 2).times(Monomial::var(1, 1));
  Monomial d = Monomial::var(1, 2);
  CHECK(compare_xpart(c, d) > 0);
  // Weight dominates regardless of ties.
  CHECK(compare_xpart(Monomial::var(1, 1), Monomial::var(0, 1)) > 0);
  // q does not affect the X-part order.
  Monomial e = d;
  e.q = 5;
  CHECK(compare_xpart(d, e) == 0);
}

TEST_CASE("ring axioms hold exactly on random triples") {
  std::mt19937_64 rng(20260810);
  for (int iter = 0; iter < 500; ++iter) {
    int nv = 1 + int(rng() % 3);
    WPolynomial a = random_poly(rng, nv), b = random_poly(rng, nv), c = random_poly(rng, nv);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == WPolynomial::zero(nv));
  }
}

TEST_CASE("gradings") {
  Weighting w = Weighting::grassmannian(2, 4);
  WPolynomial p = X(2, 0, 2) + WPolynomial::q_power(2, 1); // X1^2 + q
  CHECK(p.cohomological_degree(w) == 2);
  CHECK(p.homogeneous_degree(w) == 4);
  CHECK(!p.is_cohomologically_homogeneous(w));
  CHECK(!p.is_homogeneous(w));
  WPolynomial h = X(2, 0, 4) + WPolynomial::q_power(2, 1); // X1^4 + q
  CHECK(h.is_homogeneous(w)); // q carries weight n = 4
  CHECK(!h.is_cohomologically_homogeneous(w));
}

TEST_CASE("initial_form") {
  Weighting w1 = Weighting::grassmannian(1, 2);
  // X1^2 - q -> X1^2 (q has cohomological weight 0)
  WPolynomial p = X(1, 0, 2) - WPolynomial::q_power(1, 1);
  CHECK(initial_form(p, w1) == X(1, 0, 2));

  // X1 + X2 with weights (1,2) -> X2
  Weighting w2 = Weighting::grassmannian(2, 4);
  CHECK(initial_form(X(2, 0) + X(2, 1), w2) == X(2, 1));

  CHECK_THROWS_AS(initial_form(WPolynomial::zero(2), w2), UsageError);
}

TEST_CASE("initial forms of the G(2,4) relations are the classical ones") {
  Weighting w = Weighting::grassmannian(2, 4);
  auto rel = g24_relations();
  CHECK(initial_form(rel[0], w) == rel[0]); // q-free relation is its own initial form
  WPolynomial f2_classical = rel[1] - WPolynomial::q_power(2, 1);
  CHECK(initial_form(rel[1], w) == f2_classical);
}

TEST_CASE("groebner: univariate specialized") {
  // {X^2 - q} at q = 1: basis {X^2 - 1}, quotient {1, X}, dim 2.
  Weighting w = Weighting::grassmannian(1, 2);
  WPolynomial g = X(1, 0, 2) - WPolynomial::q_power(1, 1);
  GroebnerModel m = groebner_basis({g}, w, QMode::specialized, Rational(1));
  REQUIRE(m.reduced_basis.size() == 1);
  CHECK(m.reduced_basis[0] == X(1, 0, 2) - WPolynomial::constant(1, Rational(1)));
  CHECK(m.dimension == 2);
  REQUIRE(m.quotient_basis.size() == 2);
  CHECK(m.quotient_basis[0].is_one());
  CHECK(m.quotient_basis[1] == Monomial::var(0, 1));
}

TEST_CASE("groebner: G(2,4) formal quotient basis") {
  Weighting w = Weighting::grassmannian(2, 4);
  GroebnerModel m = groebner_basis(g24_relations(), w, QMode::formal);
  CHECK(m.dimension == 6);
  // Expected: 1, X1, X1^2, X2, X1 X2, X2^2 (some order); top monomial X2^2.
  std::vector<Monomial> expect = {
      Monomial::one(),
      Monomial::var(0, 1),
      Monomial::var(0, 2),
      Monomial::var(1, 1),
      Monomial::var(0, 1).times(Monomial::var(1, 1)),
      Monomial::var(1, 2),
  };
  for (const auto& e : expect) CHECK(m.basis_index(e) >= 0);
  CHECK(m.top_unique);
  CHECK(m.top_monomial == Monomial::var(1, 2));
  // Derived reduction rules: X1^3 -> 2 X1 X2 and X1^2 X2 -> X2^2 + q.
  CHECK(m.normal_form(X(2, 0, 3)) == Rational(2) * (X(2, 0) * X(2, 1)));
  CHECK(m.normal_form(X(2, 0, 2) * X(2, 1)) == X(2, 1, 2) + WPolynomial::q_power(2, 1));
}

TEST_CASE("groebner: dim 1 quotient") {
  Weighting w = Weighting::grassmannian(2, 4);
  GroebnerModel m = groebner_basis({X(2, 0), X(2, 1)}, w, QMode::formal);
  CHECK(m.dimension == 1);
  CHECK(m.quotient_basis[0].is_one());
}

TEST_CASE("groebner: non-Artinian input fails loudly") {
  Weighting w = Weighting::grassmannian(2, 4);
  CHECK_THROWS_WITH_AS(groebner_basis({X(2, 0) * X(2, 1)}, w, QMode::formal),
                       "infinite quotient", InconsistencyError);
}

TEST_CASE("groebner: q-dependent leading coefficient needs specialization") {
  Weighting w = Weighting::grassmannian(1, 2);
  // q X^2 - 1 cannot be used as a reducer in formal mode.
  WPolynomial g = WPolynomial::q_power(1, 1) * X(1, 0, 2) - WPolynomial::constant(1, Rational(1));
  CHECK_THROWS_AS(groebner_basis({g}, w, QMode::formal), FormalModeError);
  GroebnerModel m = groebner_basis({g}, w, QMode::specialized, Rational(2));
  CHECK(m.dimension == 2);
}

TEST_CASE("normal form: G(2,4) derived values") {
  Weighting w = Weighting::grassmannian(2, 4);
  GroebnerModel m = groebner_basis(g24_relations(), w, QMode::formal);
  auto rel = g24_relations();
  CHECK(m.normal_form(rel[0]).is_zero());
  CHECK(m.normal_form(rel[1]).is_zero());
  // NF(X1^4) = 2 X2^2 + 2q
  CHECK(m.normal_form(X(2, 0, 4)) ==
        X(2, 1, 2).scaled(Rational(2)) + WPolynomial::q_power(2, 1, Rational(2)));
  // NF(X1^8) = 8q X2^2 + 8q^2
  WPolynomial x18 = m.normal_form(X(2, 0, 8));
  WPolynomial expect = WPolynomial::q_power(2, 1, Rational(8)) * X(2, 1, 2) +
                       WPolynomial::q_power(2, 2, Rational(8));
  CHECK(x18 == expect);
}

TEST_CASE("normal form is linear, idempotent and multiplicative modulo the ideal") {
  Weighting w = Weighting::grassmannian(2, 4);
  GroebnerModel m = groebner_basis(g24_relations(), w, QMode::formal);
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    WPolynomial f = random_poly(rng, 2, 4, 4, 1);
    WPolynomial g = random_poly(rng, 2, 4, 4, 1);
    WPolynomial nf = m.normal_form(f);
    CHECK(m.normal_form(nf) == nf);
    CHECK(m.normal_form(f + g) == m.normal_form(f) + m.normal_form(g));
    CHECK(m.normal_form(f * g) == m.normal_form(m.normal_form(f) * m.normal_form(g)));
  }
}

TEST_CASE("mult_operator: identity and G(1,2) swap") {
  Weighting w1 = Weighting::grassmannian(1, 2);
  GroebnerModel m = groebner_basis({X(1, 0, 2) - WPolynomial::q_power(1, 1)}, w1,
                                   QMode::specialized, Rational(1));
  QMatrix id = m.mult_operator(WPolynomial::constant(1, Rational(1)));
  CHECK(id.trace() == QPolynomial(Rational(m.dimension)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(id.at(i, j) == (i == j ? QPolynomial(Rational(1)) : QPolynomial()));

  QMatrix mx = m.mult_operator(X(1, 0));
  // Basis {1, X}: X*1 = X, X*X = q = 1 -> swap matrix, trace 0.
  CHECK(mx.at(0, 0) == QPolynomial());
  CHECK(mx.at(1, 0) == QPolynomial(Rational(1)));
  CHECK(mx.at(0, 1) == QPolynomial(Rational(1)));
  CHECK(mx.at(1, 1) == QPolynomial());
  CHECK(mx.trace() == QPolynomial());
}

TEST_CASE("quotient dimension is C(n,k) for small Grassmannian systems") {
  // The relation construction lives in qring; here we hand-build (1,3).
  // Y_3 + (-1)^1 q with k=1: Y_j = (-1)^j X^j, so f = -X^3 - q.
  Weighting w = Weighting::grassmannian(1, 3);
  WPolynomial f = -X(1, 0, 3) - WPolynomial::q_power(1, 1);
  GroebnerModel m = groebner_basis({f}, w, QMode::formal);
  CHECK(m.dimension == 3);
  CHECK(m.top_monomial == Monomial::var(0, 2));
}

} // TEST_SUITE
