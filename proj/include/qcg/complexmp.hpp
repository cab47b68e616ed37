#ifndef QCG_COMPLEXMP_HPP
#define QCG_COMPLEXMP_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "qcg/errors.hpp"
#include "qcg/rational.hpp"

namespace qcg {

// Arbitrary-precision real; precision is set per computation scope in
// decimal digits.
using Real = boost::multiprecision::mpfr_float;

struct PrecisionScope {
  unsigned previous;
  explicit PrecisionScope(unsigned digits) : previous(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(previous); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;
};

inline Real real_from_rational(const Rational& r) {
  return Real(numerator(r).str()) / Real(denominator(r).str());
}

// Copies carrying the current default precision.  mpfr results inherit the
// precision of their operands, so values built by a caller under a lower
// default must be re-raised on entry to a numeric kernel.
inline Real at_working_precision(const Real& x) { return Real(x, Real::default_precision()); }

// Minimal complex type over Real (std::complex is not specified for
// user-defined scalars).
struct Complex {
  Real re{0}, im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Rational& r) : re(real_from_rational(r)) {}

  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  Real norm() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm()); }

  Complex pow(unsigned e) const {
    Complex r(Real(1));
    Complex base = *this;
    while (e) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  std::string str(unsigned digits = 20) const {
    Real a = boost::multiprecision::abs(im);
    return re.str(digits) + (im < 0 ? " - " : " + ") + a.str(digits) + "*i";
  }
};

inline Complex at_working_precision(const Complex& z) {
  return {at_working_precision(z.re), at_working_precision(z.im)};
}

// The n distinct n-th roots of rho, ordered as the principal root times
// e^{2 pi i m / n}, m = 0..n-1.
inline std::vector<Complex> nth_roots(const Complex& rho_in, int n) {
  using boost::math::constants::pi;
  std::vector<Complex> roots;
  Complex rho = at_working_precision(rho_in);
  Real modulus = rho.abs();
  if (modulus == 0) throw UsageError("nth_roots of zero");
  Real r = exp(log(modulus) / n);
  Real theta = atan2(rho.im, rho.re);
  for (int m = 0; m < n; ++m) {
    Real phi = (theta + 2 * pi<Real>() * m) / n;
    roots.push_back({r * cos(phi), r * sin(phi)});
  }
  return roots;
}

} // namespace qcg

#endif
