#include "doctest.h"

#include <random>

#include "qcg/schubert.hpp"

using namespace qcg;

namespace {

WPolynomial X(int nvars, int i, int e = 1) { return WPolynomial::variable(nvars, i, e); }

BoxPartition P(std::vector<int> parts) { return BoxPartition(std::move(parts)); }

// Partitions in the k x (n-k) box counted by size: the Gaussian binomial
// coefficient census, computed by direct dynamic programming over parts.
std::vector<Integer> gaussian_census(int k, int w) {
  // dp over at most k parts each of size <= w
  std::vector<std::vector<Integer>> dp(size_t(k) + 1, std::vector<Integer>(size_t(k * w) + 1, 0));
  // dp[r][s] = #partitions with exactly <= r parts, each <= w, total s, parts decreasing
  // recurse on first part value via standard partition-in-a-box recursion
  // simpler: enumerate recursively
  std::vector<Integer> census(size_t(k * w) + 1, 0);
  std::function<void(int, int, int)> rec = [&](int row, int maxval, int total) {
    if (row == k) {
      ++census[size_t(total)];
      return;
    }
    for (int v = 0; v <= maxval; ++v) rec(row + 1, v, total + v);
  };
  rec(0, w, 0);
  (void)dp;
  return census;
}

} // namespace

TEST_SUITE("schubert") {

TEST_CASE("box partitions: counts and order") {
  GrassSpec s12(1, 2);
  auto p12 = box_partitions(s12);
  REQUIRE(p12.size() == 2);
  CHECK(p12[0] == P({}));
  CHECK(p12[1] == P({1}));

  GrassSpec s24(2, 4);
  auto p24 = box_partitions(s24);
  REQUIRE(p24.size() == 6); // C(4,2)
  CHECK(p24[0] == P({}));
  CHECK(p24[1] == P({1}));
  CHECK(p24[2] == P({2}));
  CHECK(p24[3] == P({1, 1}));
  CHECK(p24[4] == P({2, 1}));
  CHECK(p24[5] == P({2, 2}));

  CHECK(box_partitions(GrassSpec(2, 5)).size() == 10);

  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(Integer(box_partitions(GrassSpec(k, n)).size()) == binomial(n, k));
}

TEST_CASE("dual partition") {
  GrassSpec s24(2, 4);
  CHECK(dual_partition(P({1}), s24) == P({2, 1}));
  CHECK(dual_partition(P({}), s24) == P({2, 2}));
  CHECK(dual_partition(P({2, 1}), s24) == P({1}));
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      GrassSpec spec(k, n);
      for (const auto& p : box_partitions(spec))
        CHECK(dual_partition(dual_partition(p, spec), spec) == p);
    }
}

TEST_CASE("segre recursion") {
  GrassSpec s24(2, 4);
  auto y = segre_from_chern(s24);
  CHECK(y[0] == -X(2, 0));                                   // Y_1 = -X1
  CHECK(y[1] == X(2, 0, 2) - X(2, 1));                        // Y_2 = X1^2 - X2
  CHECK(y[2] == -X(2, 0, 3) + Rational(2) * (X(2, 0) * X(2, 1))); // Y_3
  Weighting w = Weighting::grassmannian(2, 4);
  for (size_t j = 0; j < y.size(); ++j) {
    CHECK(y[j].is_cohomologically_homogeneous(w));
    CHECK(y[j].cohomological_degree(w) == long(j + 1));
  }

  // k = 1: Y_j = (-1)^j X^j
  auto y1 = segre_from_chern(GrassSpec(1, 4));
  for (size_t j = 0; j < y1.size(); ++j) {
    WPolynomial expect = X(1, 0, int(j + 1));
    if ((j + 1) % 2 == 1) expect = -expect;
    CHECK(y1[j] == expect);
  }
}

TEST_CASE("chern and segre recursions are mutually inverse") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n && k <= 4; ++k) {
      GrassSpec spec(k, n);
      auto segre = segre_from_chern(spec);
      auto chern = chern_from_segre(spec, segre);
      for (int m = 1; m <= n; ++m) {
        if (m <= k)
          CHECK(chern[size_t(m - 1)] == X(k, m - 1));
        else
          CHECK(chern[size_t(m - 1)].is_zero());
      }
    }
}

TEST_CASE("schur polynomials: pinned values") {
  GrassSpec s24(2, 4);
  CHECK(schur_polynomial(P({1}), s24) == -X(2, 0));
  CHECK(schur_polynomial(P({1, 1}), s24) == X(2, 1));
  CHECK(schur_polynomial(P({2, 2}), s24) == X(2, 1, 2));
  CHECK(schur_polynomial(P({}), s24) == WPolynomial::constant(2, Rational(1)));
  // c_i = (-1)^i {1^i}
  GrassSpec s36(3, 6);
  CHECK(schur_polynomial(P({1, 1, 1}), s36) == -X(3, 2));
  // {j} = s_j = Y_j
  auto y = segre_from_chern(s36);
  for (int j = 1; j <= 3; ++j) CHECK(schur_polynomial(P({j}), s36) == y[size_t(j - 1)]);
}

TEST_CASE("pieri rule: pinned examples") {
  GrassSpec s24(2, 4);
  SchubertVector v = pieri_product(P({1}), 1, s24);
  CHECK(v.term_count() == 2);
  CHECK(v.coefficient(P({2})) == QPolynomial(Rational(1)));
  CHECK(v.coefficient(P({1, 1})) == QPolynomial(Rational(1)));

  SchubertVector w = pieri_product(P({2}), 2, s24);
  CHECK(w.term_count() == 1);
  CHECK(w.coefficient(P({2, 2})) == QPolynomial(Rational(1)));

  CHECK(pieri_product(P({2, 2}), 1, s24).is_zero());
  CHECK_THROWS_AS(pieri_product(P({1}), 3, s24), UsageError);
}

TEST_CASE("classical pairing is the duality permutation matrix") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n && k <= 3; ++k) {
      GrassSpec spec(k, n);
      auto parts = box_partitions(spec);
      for (const auto& a : parts)
        for (const auto& b : parts) {
          Rational pairing = classical_pairing(a, b, spec);
          Rational expect = (b == dual_partition(a, spec)) ? 1 : 0;
          CHECK(pairing == expect);
        }
    }
}

TEST_CASE("classical product: point class squares to zero, column powers") {
  GrassSpec s24(2, 4);
  CHECK(classical_product(P({2, 2}), P({1}), s24).is_zero());
  // {1,1}^2 = {2,2} in the 2x2 box
  SchubertVector v = classical_product(P({1, 1}), P({1, 1}), s24);
  CHECK(v.term_count() == 1);
  CHECK(v.coefficient(P({2, 2})) == QPolynomial(Rational(1)));
  // {1}*{1} = {2} + {1,1}
  SchubertVector w = classical_product(P({1}), P({1}), s24);
  CHECK(w.coefficient(P({2})) == QPolynomial(Rational(1)));
  CHECK(w.coefficient(P({1, 1})) == QPolynomial(Rational(1)));
  CHECK(w.term_count() == 2);
}

TEST_CASE("quotient basis weight census equals the Gaussian binomial census") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n && k <= 3; ++k) {
      GrassSpec spec(k, n);
      // classical model: relations s_{n-k+1}..s_n
      auto y = segre_from_chern(spec);
      std::vector<WPolynomial> gens(y.begin() + (spec.n - spec.k), y.end());
      GroebnerModel m = groebner_basis(gens, Weighting::grassmannian(k, n), QMode::formal);
      CHECK(Integer(m.dimension) == spec.rank());
      auto census = m.weight_census();
      auto expect = gaussian_census(k, spec.box_width());
      REQUIRE(census.size() <= expect.size());
      for (size_t wgt = 0; wgt < expect.size(); ++wgt) {
        Integer got = wgt < census.size() ? Integer(census[wgt]) : Integer(0);
        CHECK(got == expect[wgt]);
      }
      CHECK(m.top_unique);
      CHECK(m.top_monomial == Monomial::var(k - 1, spec.box_width()));
    }
}

TEST_CASE("schur transform: round trip and pinned expansions") {
  GrassSpec spec(2, 4);
  auto y = segre_from_chern(spec);
  // quantum relations: Y_3, Y_4 + q
  std::vector<WPolynomial> gens = {y[2], y[3] + WPolynomial::q_power(2, 1)};
  GroebnerModel m = groebner_basis(gens, Weighting::grassmannian(2, 4), QMode::formal);
  SchurTransform st(spec, m);

  // schur -> vector round trip is the unit vector, for every partition
  for (const auto& p : st.partitions()) {
    SchubertVector v = st.to_schubert(st.schur_poly(p));
    CHECK(v.term_count() == 1);
    CHECK(v.coefficient(p) == QPolynomial(Rational(1)));
  }

  // X1^2 = {2} + {1,1}
  SchubertVector v = st.to_schubert(WPolynomial::variable(2, 0, 2));
  CHECK(v.term_count() == 2);
  CHECK(v.coefficient(P({2})) == QPolynomial(Rational(1)));
  CHECK(v.coefficient(P({1, 1})) == QPolynomial(Rational(1)));

  // Jacobian of the G(2,4) relations: NF(X1^4 + 4X2^2) = 6X2^2 + 2q
  WPolynomial jac = WPolynomial::variable(2, 0, 4) + Rational(4) * WPolynomial::variable(2, 1, 2);
  SchubertVector jv = st.to_schubert(jac);
  CHECK(jv.term_count() == 2);
  CHECK(jv.coefficient(P({2, 2})) == QPolynomial(Rational(6)));
  CHECK(jv.coefficient(P({})) == QPolynomial(Rational(2), 1)); // 2q

  // zero maps to the empty vector
  CHECK(st.to_schubert(WPolynomial::zero(2)).is_zero());

  // from_schubert is a section of to_schubert
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    SchubertVector rv(spec);
    for (const auto& p : st.partitions())
      if (rng() % 2) rv.add(p, QPolynomial(Rational(long(rng() % 7) - 3), int(rng() % 2)));
    CHECK(st.to_schubert(st.from_schubert(rv)) == rv);
  }
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("2,1") == P({2, 1}));
  CHECK(parse_partition("[2,1]") == P({2, 1}));
  CHECK(parse_partition("0") == P({}));
  CHECK(parse_partition("") == P({}));
  CHECK(parse_partition("3,3,0") == P({3, 3}));
  CHECK_THROWS_AS(parse_partition("1,2"), UsageError);
  CHECK_THROWS_AS(parse_partition("a"), UsageError);
}

} // TEST_SUITE
