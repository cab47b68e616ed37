#ifndef QCG_RATIONAL_HPP
#define QCG_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace qcg {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Canonical exact string: "p" for integers, "p/q" otherwise.
inline std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

} // namespace qcg

#endif
