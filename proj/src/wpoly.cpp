#include "qcg/wpoly.hpp"

#include <algorithm>
#include <functional>

namespace qcg {

std::string monomial_string(const Monomial& m, int nvars) {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (m.x[size_t(i)] == 0) continue;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(i + 1);
    if (m.x[size_t(i)] > 1) s += "^" + std::to_string(m.x[size_t(i)]);
  }
  if (m.q > 0) {
    if (!s.empty()) s += "*";
    s += "q";
    if (m.q > 1) s += "^" + std::to_string(m.q);
  }
  if (s.empty()) s = "1";
  return s;
}

void WPolynomial::normalize_terms() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return term_before(a.first, b.first); });
  size_t out = 0;
  for (size_t i = 0; i < terms_.size();) {
    Monomial m = terms_[i].first;
    Rational c = terms_[i].second;
    size_t j = i + 1;
    while (j < terms_.size() && terms_[j].first == m) c += terms_[j++].second;
    if (c != 0) terms_[out++] = {m, std::move(c)};
    i = j;
  }
  terms_.resize(out);
}

WPolynomial WPolynomial::from_terms(int nvars, std::vector<Term> terms) {
  WPolynomial p(nvars);
  p.terms_ = std::move(terms);
  p.normalize_terms();
  return p;
}

WPolynomial& WPolynomial::operator+=(const WPolynomial& o) {
  if (o.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) merged.push_back({terms_[i].first, std::move(c)});
      ++i, ++j;
    } else if (term_before(terms_[i].first, o.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else {
      merged.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) merged.push_back(terms_[i++]);
  while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

WPolynomial& WPolynomial::operator-=(const WPolynomial& o) {
  return *this += o.scaled(Rational(-1));
}

WPolynomial WPolynomial::operator-() const { return scaled(Rational(-1)); }

WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
  WPolynomial r(std::max(a.nvars(), b.nvars()));
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<WPolynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.push_back({ma.times(mb), ca * cb});
  r.terms_ = std::move(prod);
  r.normalize_terms();
  return r;
}

WPolynomial& WPolynomial::scale(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

void WPolynomial::add_multiple(const Rational& c, const Monomial& shift, const WPolynomial& o) {
  if (c == 0 || o.is_zero()) return;
  std::vector<Term> shifted;
  shifted.reserve(o.terms_.size());
  for (const auto& [m, co] : o.terms_) shifted.push_back({m.times(shift), co * c});
  // A monomial shift preserves the term order, so the shifted list is sorted.
  WPolynomial tmp(nvars_);
  tmp.terms_ = std::move(shifted);
  *this += tmp;
}

WPolynomial WPolynomial::pow(int e) const {
  WPolynomial r = WPolynomial::constant(nvars_, Rational(1));
  WPolynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

WPolynomial WPolynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    uint16_t e = m.x[size_t(var)];
    if (e == 0) continue;
    Monomial d = m;
    d.x[size_t(var)] = uint16_t(e - 1);
    out.push_back({d, c * e});
  }
  return from_terms(nvars_, std::move(out));
}

WPolynomial WPolynomial::substitute_q(const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Rational scale = 1;
    for (uint32_t i = 0; i < m.q; ++i) scale *= value;
    out.push_back({m.drop_q(), c * scale});
  }
  return from_terms(nvars_, std::move(out));
}

Rational WPolynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return Rational(0);
}

QPolynomial WPolynomial::q_coefficient(const Monomial& xpart) const {
  QPolynomial qc;
  for (const auto& [m, c] : terms_)
    if (m.drop_q() == xpart.drop_q()) qc.add_term(c, int(m.q));
  return qc;
}

const WPolynomial::Term& WPolynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

const Monomial& WPolynomial::leading_xmonomial() const { return leading_term().first; }

QPolynomial WPolynomial::leading_qcoefficient() const {
  QPolynomial qc;
  if (terms_.empty()) return qc;
  const Monomial lead = terms_.front().first.drop_q();
  for (const auto& [m, c] : terms_) {
    if (m.drop_q() != lead) break; // terms of one X-monomial are contiguous
    qc.add_term(c, int(m.q));
  }
  return qc;
}

long WPolynomial::cohomological_degree(const Weighting& w) const {
  if (terms_.empty()) return -1;
  const auto wa = w.weight_array();
  long best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long d = m.weight(wa) + long(m.q) * w.q_cohomological_weight;
    if (first || d > best) best = d, first = false;
  }
  return best;
}

long WPolynomial::homogeneous_degree(const Weighting& w) const {
  if (terms_.empty()) return -1;
  const auto wa = w.weight_array();
  long best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long d = m.weight(wa) + long(m.q) * w.q_homogeneous_weight;
    if (first || d > best) best = d, first = false;
  }
  return best;
}

bool WPolynomial::is_cohomologically_homogeneous(const Weighting& w) const {
  if (terms_.empty()) return true;
  const auto wa = w.weight_array();
  long d0 = terms_[0].first.weight(wa) + long(terms_[0].first.q) * w.q_cohomological_weight;
  for (const auto& [m, c] : terms_)
    if (m.weight(wa) + long(m.q) * w.q_cohomological_weight != d0) return false;
  return true;
}

bool WPolynomial::is_homogeneous(const Weighting& w) const {
  if (terms_.empty()) return true;
  const auto wa = w.weight_array();
  long d0 = terms_[0].first.weight(wa) + long(terms_[0].first.q) * w.q_homogeneous_weight;
  for (const auto& [m, c] : terms_)
    if (m.weight(wa) + long(m.q) * w.q_homogeneous_weight != d0) return false;
  return true;
}

std::string WPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string cs = rational_string(a);
    if (m.is_one())
      s += cs;
    else if (cs == "1")
      s += monomial_string(m, nvars_);
    else
      s += cs + "*" + monomial_string(m, nvars_);
    first = false;
  }
  return s;
}

WPolynomial initial_form(const WPolynomial& p, const Weighting& w) {
  if (p.is_zero()) throw UsageError("no initial form of zero");
  const auto wa = w.weight_array();
  long top = p.cohomological_degree(w);
  std::vector<WPolynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    long d = m.weight(wa) + long(m.q) * w.q_cohomological_weight;
    if (d == top) out.push_back({m, c});
  }
  return WPolynomial::from_terms(p.nvars(), std::move(out));
}

// Determinant of a k x k matrix of polynomials by Laplace expansion with
// memoization over column subsets.
WPolynomial poly_determinant(const std::vector<std::vector<WPolynomial>>& m, int nvars) {
  int k = int(m.size());
  if (k == 0) return WPolynomial::constant(nvars, Rational(1));
  std::vector<WPolynomial> memo(size_t(1) << k);
  std::vector<char> ready(size_t(1) << k, 0);
  std::function<const WPolynomial&(unsigned)> det = [&](unsigned mask) -> const WPolynomial& {
    if (ready[mask]) return memo[mask];
    WPolynomial r(nvars);
    if (mask == 0) {
      r = WPolynomial::constant(nvars, Rational(1));
    } else {
      int row = k - __builtin_popcount(mask); // expand along the first free row
      int rank = 0; // position of the column inside the submatrix
      for (int j = 0; j < k; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m[size_t(row)][size_t(j)].is_zero()) {
          WPolynomial term = m[size_t(row)][size_t(j)] * det(mask & ~(1u << j));
          r += (rank % 2 == 0) ? term : -term;
        }
        ++rank;
      }
    }
    memo[mask] = std::move(r);
    ready[mask] = 1;
    return memo[mask];
  };
  return det((1u << k) - 1);
}

} // namespace qcg
