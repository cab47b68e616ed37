#ifndef QCG_MONOMIAL_HPP
#define QCG_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "qcg/errors.hpp"

namespace qcg {

// One power product X_1^{e_1}...X_k^{e_k} * q^{e_q}.  Exponent slots above
// the ambient variable count stay zero, so monomials from the same ring
// compare componentwise.
struct Monomial {
  static constexpr int kMaxVars = 8;

  std::array<uint16_t, kMaxVars> x{};
  uint32_t q = 0;

  bool operator==(const Monomial& o) const { return x == o.x && q == o.q; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool is_one() const {
    if (q != 0) return false;
    for (auto e : x)
      if (e != 0) return false;
    return true;
  }

  // Cohomological weight: X_i has weight w_i, q has weight 0.
  long weight(const std::array<int, kMaxVars>& w) const {
    long s = 0;
    for (int i = 0; i < kMaxVars; ++i) s += long(x[i]) * w[i];
    return s;
  }

  // Weight under the decreed instance grading w(X_i) = i.
  long standard_weight() const {
    long s = 0;
    for (int i = 0; i < kMaxVars; ++i) s += long(x[i]) * (i + 1);
    return s;
  }

  Monomial times(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.x[i] = uint16_t(x[i] + o.x[i]);
    r.q = q + o.q;
    return r;
  }

  // Divisibility of the X-part only; q exponents are not constrained.
  bool x_divisible_by(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (x[i] < o.x[i]) return false;
    return true;
  }

  Monomial x_quotient(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.x[i] = uint16_t(x[i] - o.x[i]);
    r.q = q;
    return r;
  }

  Monomial drop_q() const {
    Monomial r = *this;
    r.q = 0;
    return r;
  }

  static Monomial one() { return Monomial{}; }

  static Monomial var(int i, int e = 1) {
    Monomial m;
    m.x[size_t(i)] = uint16_t(e);
    return m;
  }

  static Monomial q_power(uint32_t d) {
    Monomial m;
    m.q = d;
    return m;
  }
};

// The decreed monomial order on X-parts: graded by the weights w(X_i) = i,
// ties broken reverse-lexicographically scanning X_k, X_{k-1}, ..., X_1 with
// the smaller exponent winning.  This is the unique degree-compatible order
// for which the quotient of the Grassmannian system has X_k^{n-k} as its
// top standard monomial.  Returns <0, 0, >0.
inline int compare_xpart(const Monomial& a, const Monomial& b) {
  long wa = a.standard_weight(), wb = b.standard_weight();
  if (wa != wb) return wa < wb ? -1 : 1;
  for (int i = Monomial::kMaxVars - 1; i >= 0; --i) {
    if (a.x[i] != b.x[i]) return a.x[i] > b.x[i] ? -1 : 1;
  }
  return 0;
}

// Total order on terms: X-part descending is primary, q-power ascending
// breaks ties, so the terms of one X-monomial form a contiguous run with
// its q-coefficient in increasing q order.
inline bool term_before(const Monomial& a, const Monomial& b) {
  int c = compare_xpart(a, b);
  if (c != 0) return c > 0;
  return a.q < b.q;
}

std::string monomial_string(const Monomial& m, int nvars);

} // namespace qcg

#endif
