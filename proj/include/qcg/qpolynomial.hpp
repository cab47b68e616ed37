#ifndef QCG_QPOLYNOMIAL_HPP
#define QCG_QPOLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "qcg/rational.hpp"

namespace qcg {

// Dense univariate polynomial in the deformation parameter q over the
// rationals.  Coefficient vectors are kept trimmed so equality is
// structural.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  QPolynomial(Rational c, int q_power) {
    if (c != 0) {
      c_.assign(size_t(q_power) + 1, Rational(0));
      c_.back() = std::move(c);
    }
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; } // -1 for zero

  const Rational& coeff(int d) const {
    static const Rational kZero(0);
    if (d < 0 || d >= int(c_.size())) return kZero;
    return c_[size_t(d)];
  }

  // True when the polynomial is a constant (possibly zero).
  bool is_constant() const { return c_.size() <= 1; }
  Rational constant_value() const { return c_.empty() ? Rational(0) : c_[0]; }

  // True when exactly one power of q carries a nonzero coefficient.
  bool is_monomial() const {
    int nz = 0;
    for (const auto& c : c_)
      if (c != 0) ++nz;
    return nz <= 1;
  }

  void add_term(const Rational& c, int d) {
    if (c == 0) return;
    if (int(c_.size()) <= d) c_.resize(size_t(d) + 1, Rational(0));
    c_[size_t(d)] += c;
    trim();
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  QPolynomial& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
  friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }

  QPolynomial operator-() const {
    QPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

  Rational eval(const Rational& q) const {
    Rational v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * q + c_[i];
    return v;
  }

  // Nonzero coefficients as {q_power: value}, fixed ascending order.
  std::map<int, Rational> entries() const {
    std::map<int, Rational> m;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) m[int(i)] = c_[i];
    return m;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += rational_string(c_[i]);
      if (i == 1) s += "*q";
      if (i > 1) s += "*q^" + std::to_string(i);
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

} // namespace qcg

#endif
