#ifndef QCG_TEST_HELPERS_HPP
#define QCG_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "qcg/wpoly.hpp"

namespace qcg::testing {

// Deterministic random sparse polynomial: small exponents, small integer or
// rational coefficients, optional q powers.
inline WPolynomial random_poly(std::mt19937_64& rng, int nvars, int max_terms = 5,
                               int max_exp = 3, int max_q = 2, bool allow_fraction = true) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<int> qd(0, max_q);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<WPolynomial::Term> terms;
  int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    for (int i = 0; i < nvars; ++i) m.x[size_t(i)] = uint16_t(expd(rng));
    m.q = uint32_t(qd(rng));
    Rational c(coeff(rng), allow_fraction ? den(rng) : 1);
    terms.push_back({m, c});
  }
  return WPolynomial::from_terms(nvars, std::move(terms));
}

} // namespace qcg::testing

#endif
