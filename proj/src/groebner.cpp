#include "qcg/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qcg {

namespace {

// Scale to integer coefficients with content 1 and positive leading
// coefficient.
WPolynomial primitive_part(const WPolynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : f.terms()) {
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
  }
  Rational s(den_lcm, num_gcd); // num_gcd > 0 for nonzero f
  if (f.leading_term().second < 0) s = -s;
  return f.scaled(s);
}

// Leading coefficient for reduction purposes.  In formal mode it must be a
// q-free constant.
Rational reduction_lc(const WPolynomial& f, QMode mode) {
  QPolynomial lc = f.leading_qcoefficient();
  if (!lc.is_constant()) {
    if (mode == QMode::formal)
      throw FormalModeError("formal mode unavailable, use specialization");
    throw Error("internal: q-dependent leading coefficient in specialized mode");
  }
  return lc.constant_value();
}

struct PairKey {
  long sugar;
  long lcm_weight;
  Monomial lcm;
  int i, j;

  bool operator<(const PairKey& o) const {
    if (sugar != o.sugar) return sugar < o.sugar;
    if (lcm_weight != o.lcm_weight) return lcm_weight < o.lcm_weight;
    int c = compare_xpart(lcm, o.lcm);
    if (c != 0) return c < 0;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

Monomial x_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int t = 0; t < Monomial::kMaxVars; ++t) r.x[t] = std::max(a.x[t], b.x[t]);
  return r;
}

bool x_equal(const Monomial& a, const Monomial& b) { return a.drop_q() == b.drop_q(); }

// Full multivariate division by the basis; q-powers ride along unchanged.
WPolynomial reduce_full(const WPolynomial& f, const std::vector<WPolynomial>& basis,
                        const std::vector<Rational>& lcs, QMode mode, int skip = -1) {
  WPolynomial work = f;
  std::vector<WPolynomial::Term> remainder;
  while (!work.is_zero()) {
    const auto& [mono, coeff] = work.leading_term();
    int reducer = -1;
    for (size_t g = 0; g < basis.size(); ++g) {
      if (int(g) == skip) continue;
      if (mono.x_divisible_by(basis[g].leading_xmonomial())) {
        reducer = int(g);
        break;
      }
    }
    if (reducer < 0) {
      remainder.push_back({mono, coeff});
      WPolynomial head = WPolynomial::monomial(work.nvars(), mono, coeff);
      work -= head;
      continue;
    }
    const WPolynomial& g = basis[size_t(reducer)];
    Monomial shift = mono.x_quotient(g.leading_xmonomial());
    shift.q = mono.q; // g has q-free leading coefficient
    work.add_multiple(-coeff / lcs[size_t(reducer)], shift, g);
  }
  (void)mode;
  return WPolynomial::from_terms(f.nvars(), std::move(remainder));
}

long sugar_degree(const WPolynomial& f, const Weighting& w) {
  return f.cohomological_degree(w);
}

} // namespace

GroebnerModel groebner_basis(std::vector<WPolynomial> gens, const Weighting& w, QMode mode,
                             const Rational& q_value) {
  GroebnerModel model;
  model.nvars = w.nvars();
  model.weighting = w;
  model.q_mode = mode;
  model.q_value = q_value;
  model.generators = gens;

  std::vector<WPolynomial> basis;
  std::vector<Rational> lcs;
  std::vector<long> sugars;

  auto insert = [&](WPolynomial g, long sugar) -> int {
    g = primitive_part(g);
    lcs.push_back(reduction_lc(g, mode));
    basis.push_back(std::move(g));
    sugars.push_back(sugar);
    return int(basis.size()) - 1;
  };

  for (auto& g : gens) {
    if (mode == QMode::specialized) g = g.substitute_q(q_value);
    if (g.is_zero()) continue;
    insert(g, sugar_degree(g, w));
  }
  if (basis.empty()) throw InconsistencyError("infinite quotient");

  std::set<PairKey> pairs;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial lcm = x_lcm(basis[size_t(i)].leading_xmonomial(), basis[size_t(j)].leading_xmonomial());
      long lw = lcm.weight(w.weight_array());
      long sugar = std::max(sugars[size_t(i)] + lw - basis[size_t(i)].leading_xmonomial().weight(w.weight_array()),
                            sugars[size_t(j)] + lw - basis[size_t(j)].leading_xmonomial().weight(w.weight_array()));
      pairs.insert(PairKey{sugar, lw, lcm, i, j});
    }
  };
  for (int j = 1; j < int(basis.size()); ++j) push_pairs(j);

  while (!pairs.empty()) {
    PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    const WPolynomial& gi = basis[size_t(pk.i)];
    const WPolynomial& gj = basis[size_t(pk.j)];
    const Monomial lti = gi.leading_xmonomial();
    const Monomial ltj = gj.leading_xmonomial();
    // Buchberger's coprimality criterion.
    if (x_equal(pk.lcm, lti.times(ltj))) continue;

    WPolynomial s(model.nvars);
    s.add_multiple(lcs[size_t(pk.j)], pk.lcm.x_quotient(lti).drop_q(), gi);
    s.add_multiple(-lcs[size_t(pk.i)], pk.lcm.x_quotient(ltj).drop_q(), gj);
    WPolynomial r = reduce_full(s, basis, lcs, mode);
    if (r.is_zero()) continue;
    int idx = insert(std::move(r), pk.sugar);
    push_pairs(idx);
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another leading monomial.
  std::vector<char> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial &mi = basis[i].leading_xmonomial(), &mj = basis[j].leading_xmonomial();
      if (mi.x_divisible_by(mj) && !(x_equal(mi, mj) && j > i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<WPolynomial> minimal;
  std::vector<Rational> minimal_lcs;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) {
      minimal.push_back(basis[i]);
      minimal_lcs.push_back(lcs[i]);
    }

  // Tail-reduce to the unique reduced basis.
  for (size_t pass = 0; pass < 2; ++pass)
    for (size_t i = 0; i < minimal.size(); ++i) {
      WPolynomial r = reduce_full(minimal[i], minimal, minimal_lcs, mode, int(i));
      minimal[i] = primitive_part(r);
      minimal_lcs[i] = reduction_lc(minimal[i], mode);
    }

  std::sort(minimal.begin(), minimal.end(), [](const WPolynomial& a, const WPolynomial& b) {
    return !term_before(a.leading_xmonomial(), b.leading_xmonomial());
  });
  model.reduced_basis = std::move(minimal);

  // Artinian check: every variable needs a pure power among the leading
  // monomials.
  std::vector<int> bound(size_t(model.nvars), -1);
  for (const auto& g : model.reduced_basis) {
    const Monomial& lt = g.leading_xmonomial();
    int var = -1;
    bool pure = true;
    for (int t = 0; t < model.nvars; ++t) {
      if (lt.x[size_t(t)] > 0) {
        if (var >= 0) {
          pure = false;
          break;
        }
        var = t;
      }
    }
    if (pure && var >= 0) {
      int e = lt.x[size_t(var)];
      if (bound[size_t(var)] < 0 || e < bound[size_t(var)]) bound[size_t(var)] = e;
    }
  }
  for (int t = 0; t < model.nvars; ++t)
    if (bound[size_t(t)] < 0) throw InconsistencyError("infinite quotient");

  // Standard monomials: not divisible by any leading monomial.
  std::vector<Monomial> standard;
  Monomial cur;
  auto irreducible = [&](const Monomial& m) {
    for (const auto& g : model.reduced_basis)
      if (m.x_divisible_by(g.leading_xmonomial())) return false;
    return true;
  };
  std::function<void(int)> enumerate = [&](int var) {
    if (var == model.nvars) {
      if (irreducible(cur)) standard.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[size_t(var)]; ++e) {
      cur.x[size_t(var)] = uint16_t(e);
      enumerate(var + 1);
    }
    cur.x[size_t(var)] = 0;
  };
  enumerate(0);

  std::sort(standard.begin(), standard.end(),
            [](const Monomial& a, const Monomial& b) { return term_before(b, a); });
  model.quotient_basis = std::move(standard);
  model.dimension = int(model.quotient_basis.size());
  for (int i = 0; i < model.dimension; ++i) model.index_[model.quotient_basis[size_t(i)]] = i;

  long top_weight = -1;
  int top_count = 0;
  for (const auto& m : model.quotient_basis) {
    long wt = m.weight(w.weight_array());
    if (wt > top_weight) {
      top_weight = wt;
      top_count = 1;
      model.top_monomial = m;
    } else if (wt == top_weight) {
      ++top_count;
    }
  }
  model.top_unique = (top_count == 1);
  return model;
}

WPolynomial GroebnerModel::normal_form(const WPolynomial& f) const {
  WPolynomial g = (q_mode == QMode::specialized) ? f.substitute_q(q_value) : f;
  std::vector<Rational> lcs;
  lcs.reserve(reduced_basis.size());
  for (const auto& b : reduced_basis) lcs.push_back(b.leading_qcoefficient().constant_value());
  return reduce_full(g, reduced_basis, lcs, q_mode);
}

int GroebnerModel::basis_index(const Monomial& m) const {
  auto it = index_.find(m.drop_q());
  return it == index_.end() ? -1 : it->second;
}

std::vector<QPolynomial> GroebnerModel::coordinates(const WPolynomial& reduced) const {
  std::vector<QPolynomial> v;
  v.resize(size_t(dimension));
  for (const auto& [m, c] : reduced.terms()) {
    int i = basis_index(m);
    if (i < 0) throw InconsistencyError("polynomial not supported on the quotient basis");
    v[size_t(i)].add_term(c, int(m.q));
  }
  return v;
}

QMatrix GroebnerModel::mult_operator(const WPolynomial& f) const {
  QMatrix m(dimension);
  for (int j = 0; j < dimension; ++j) {
    WPolynomial col = normal_form(f * WPolynomial::monomial(nvars, quotient_basis[size_t(j)], Rational(1)));
    auto v = coordinates(col);
    for (int i = 0; i < dimension; ++i) m.at(i, j) = std::move(v[size_t(i)]);
  }
  return m;
}

SparseQMatrix GroebnerModel::mult_operator_sparse(const WPolynomial& f) const {
  SparseQMatrix m;
  m.n = dimension;
  m.cols.resize(size_t(dimension));
  for (int j = 0; j < dimension; ++j) {
    WPolynomial col = normal_form(f * WPolynomial::monomial(nvars, quotient_basis[size_t(j)], Rational(1)));
    auto v = coordinates(col);
    for (int i = 0; i < dimension; ++i)
      if (!v[size_t(i)].is_zero()) m.cols[size_t(j)].push_back({i, std::move(v[size_t(i)])});
  }
  return m;
}

std::vector<int> GroebnerModel::weight_census() const {
  std::vector<int> census;
  for (const auto& m : quotient_basis) {
    long wt = m.weight(weighting.weight_array());
    if (long(census.size()) <= wt) census.resize(size_t(wt) + 1, 0);
    ++census[size_t(wt)];
  }
  return census;
}

} // namespace qcg
