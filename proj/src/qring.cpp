#include "qcg/qring.hpp"

#include <functional>
#include <random>

namespace qcg {

RelationSystem build_relations(const GrassSpec& spec, QMode mode, const Rational& q_value) {
  RelationSystem sys;
  sys.spec = spec;
  sys.q_mode = mode;
  sys.q_value = q_value;
  auto segre = segre_from_chern(spec);
  const int k = spec.k, n = spec.n;
  Weighting w = Weighting::grassmannian(k, n);
  for (int i = 1; i <= k; ++i) {
    WPolynomial f = segre[size_t(n - k + i - 1)]; // Y_{n-k+i}
    sys.classical_relations.push_back(f);
    if (i == k) {
      Rational sign = (k % 2 == 0) ? 1 : -1;
      f += WPolynomial::q_power(k, 1, sign); // Y_n + (-1)^k q
    }
    sys.relations.push_back(std::move(f));
  }
  for (int i = 0; i < k; ++i) {
    const WPolynomial& f = sys.relations[size_t(i)];
    if (initial_form(f, w) != sys.classical_relations[size_t(i)])
      throw InconsistencyError("relation initial form differs from the classical relation");
    if (f.cohomological_degree(w) != n - k + i + 1)
      throw InconsistencyError("relation has unexpected cohomological weight");
    if (!f.is_homogeneous(w))
      throw InconsistencyError("relation is not homogeneous under the q -> n grading");
  }
  return sys;
}

QuantumModel::QuantumModel(const GrassSpec& spec, QMode mode, const Rational& q_value,
                           bool corrupt)
    : spec_(spec) {
  system_ = build_relations(spec, mode, q_value);
  if (corrupt) {
    // Negative control: bump the q-coefficient of the last relation.  The
    // classical part is untouched, so the model still builds; the theorem
    // relations no longer vanish in it.
    system_.relations.back() += WPolynomial::q_power(spec.k, 1);
  }
  Weighting w = Weighting::grassmannian(spec.k, spec.n);
  groebner_ = std::make_unique<GroebnerModel>(
      groebner_basis(system_.relations, w, mode, q_value));
  if (Integer(groebner_->dimension) != spec.rank() && !corrupt)
    throw InconsistencyError("quantum model dimension differs from C(n,k)");
  if (!groebner_->top_unique)
    throw InconsistencyError("quotient basis has no unique top-weight monomial");
  schur_ = std::make_unique<SchurTransform>(spec, *groebner_);
  partitions_ = schur_->partitions();
  for (int i = 0; i < int(partitions_.size()); ++i) partition_index_[partitions_[size_t(i)]] = i;
  std::vector<int> full(size_t(spec.k), spec.box_width());
  full_box_ = BoxPartition(full);

  WPolynomial esum(spec.k);
  for (const auto& p : partitions_)
    esum += schur_->schur_poly(p) * schur_->schur_poly(dual_partition(p, spec));
  handle_nf_ = groebner_->normal_form(esum);
  handle_vector_ = schur_->to_schubert(handle_nf_);
}

SchubertVector QuantumModel::unit_class(const BoxPartition& p) const {
  SchubertVector v(spec_);
  v.add(p, QPolynomial(Rational(1)));
  return v;
}

const SchubertVector& QuantumModel::basis_product(const BoxPartition& a,
                                                  const BoxPartition& b) const {
  auto ia = partition_index_.find(a), ib = partition_index_.find(b);
  if (ia == partition_index_.end() || ib == partition_index_.end())
    throw UsageError("partition does not fit the box");
  std::pair<int, int> key{std::min(ia->second, ib->second), std::max(ia->second, ib->second)};
  auto it = product_cache_.find(key);
  if (it != product_cache_.end()) return it->second;
  WPolynomial prod = schur_->schur_poly(partitions_[size_t(key.first)]) *
                     schur_->schur_poly(partitions_[size_t(key.second)]);
  SchubertVector v = schur_->to_schubert(prod);
  return product_cache_.emplace(key, std::move(v)).first->second;
}

QPolynomial QuantumModel::box_coefficient(const WPolynomial& f) const {
  auto coords = groebner_->coordinates(groebner_->normal_form(f));
  QPolynomial t;
  for (int b = 0; b < groebner_->dimension; ++b)
    if (!coords[size_t(b)].is_zero()) t += coords[size_t(b)] * schur_->box_functional(b);
  return t;
}

SchubertVector quantum_product(const SchubertVector& a, const SchubertVector& b,
                               const QuantumModel& m) {
  if (a.spec() != m.spec() || b.spec() != m.spec())
    throw UsageError("Schubert vectors over a different Grassmannian");
  SchubertVector out(m.spec());
  for (const auto& [pa, ca] : a.entries())
    for (const auto& [pb, cb] : b.entries()) {
      SchubertVector term = m.basis_product(pa, pb);
      term.scale(ca * cb);
      out += term;
    }
  return out;
}

Integer gw3(const BoxPartition& lambda, const BoxPartition& mu, const BoxPartition& nu, int d,
            const QuantumModel& m) {
  const GrassSpec& spec = m.spec();
  if (!lambda.fits(spec) || !mu.fits(spec) || !nu.fits(spec))
    throw UsageError("partition does not fit the box");
  if (d < 0) throw UsageError("negative degree");
  if (lambda.size() + mu.size() + nu.size() != spec.dimension() + d * spec.n) return 0;
  const SchubertVector& prod = m.basis_product(lambda, mu);
  Rational c = prod.coefficient(dual_partition(nu, spec)).coeff(d);
  if (!is_integer(c))
    throw InconsistencyError("non-integer Gromov-Witten constant: " + rational_string(c));
  return numerator(c);
}

QPolynomial genus_invariant_exact(const WPolynomial& f, int genus, const QuantumModel& m) {
  if (genus < 0) throw UsageError("negative genus");
  WPolynomial acc = m.groebner().normal_form(f);
  for (int g = 0; g < genus; ++g) acc = m.groebner().normal_form(acc * m.handle_poly());
  return m.box_coefficient(acc);
}

std::vector<std::pair<Monomial, std::vector<QPolynomial>>> genus_invariant_sweep(
    const QuantumModel& m, long weight_bound, int genus_max) {
  const GroebnerModel& gm = m.groebner();
  const int dim = gm.dimension;
  const int k = m.spec().k;

  std::vector<SparseQMatrix> var_ops;
  for (int i = 0; i < k; ++i)
    var_ops.push_back(gm.mult_operator_sparse(WPolynomial::variable(k, i)));

  auto apply = [&](const SparseQMatrix& op, const std::vector<QPolynomial>& v) {
    std::vector<QPolynomial> out;
    out.resize(size_t(dim));
    for (int j = 0; j < dim; ++j) {
      if (v[size_t(j)].is_zero()) continue;
      for (const auto& [row, entry] : op.cols[size_t(j)]) out[size_t(row)] += entry * v[size_t(j)];
    }
    return out;
  };

  // Base vectors: coordinates of NF(E^g).
  std::vector<std::vector<QPolynomial>> base;
  WPolynomial acc = WPolynomial::constant(k, Rational(1));
  for (int g = 0; g <= genus_max; ++g) {
    base.push_back(gm.coordinates(gm.normal_form(acc)));
    acc = gm.normal_form(acc * m.handle_poly());
  }

  std::vector<std::pair<Monomial, std::vector<QPolynomial>>> results;
  auto evaluate = [&](const Monomial& mono, const std::vector<std::vector<QPolynomial>>& vecs) {
    std::vector<QPolynomial> inv;
    for (const auto& v : vecs) {
      QPolynomial t;
      for (int b = 0; b < dim; ++b)
        if (!v[size_t(b)].is_zero()) t += v[size_t(b)] * m.schur().box_functional(b);
      inv.push_back(std::move(t));
    }
    results.push_back({mono, std::move(inv)});
  };

  // Tree over monomials: children extend by X_j with j <= lowest index
  // present, so every monomial has one canonical parent.
  std::function<void(const Monomial&, int, const std::vector<std::vector<QPolynomial>>&)> dfs =
      [&](const Monomial& mono, int max_var, const std::vector<std::vector<QPolynomial>>& vecs) {
        evaluate(mono, vecs);
        for (int j = 0; j <= max_var && j < k; ++j) {
          Monomial child = mono.times(Monomial::var(j));
          if (child.standard_weight() > weight_bound) continue;
          std::vector<std::vector<QPolynomial>> cv;
          for (const auto& v : vecs) cv.push_back(apply(var_ops[size_t(j)], v));
          dfs(child, j, cv);
        }
      };
  dfs(Monomial::one(), k - 1, base);
  return results;
}

SelfcheckReport ring_selfcheck(const QuantumModel& m, uint64_t seed, int composition_tuples) {
  SelfcheckReport rep;
  const GrassSpec& spec = m.spec();
  const auto& parts = m.partitions();
  const int np = int(parts.size());

  // (a) theorem relations vanish in the ring
  RelationSystem pristine = build_relations(spec, m.system().q_mode, m.system().q_value);
  for (size_t i = 0; i < pristine.relations.size(); ++i) {
    bool ok = m.groebner().normal_form(pristine.relations[i]).is_zero();
    rep.record(ok, "relation f_" + std::to_string(i + 1) + " does not vanish in the ring");
  }

  // (c) quantum Poincare pairing equals the duality permutation
  for (const auto& a : parts)
    for (const auto& b : parts) {
      QPolynomial pairing = m.basis_product(a, b).coefficient(m.full_box());
      QPolynomial expect;
      if (b == dual_partition(a, spec)) expect = QPolynomial(Rational(1));
      bool ok = pairing == expect;
      if (!ok)
        rep.record(false, "pairing <" + a.str() + "," + b.str() + "> = " + pairing.str());
      else
        rep.record(true, "");
    }

  // q^0 structure constants match the classical Pieri oracle
  for (const auto& a : parts)
    for (const auto& b : parts) {
      SchubertVector classical = classical_product(a, b, spec);
      const SchubertVector& quantum = m.basis_product(a, b);
      bool ok = true;
      for (const auto& p : parts) {
        if (quantum.coefficient(p).coeff(0) != classical.coefficient(p).coeff(0)) ok = false;
      }
      rep.record(ok, "q^0 part of " + a.str() + " * " + b.str() + " differs from the classical product");
    }

  // (b) associativity over all basis triples, via the structure tensor
  for (int i = 0; i < np; ++i)
    for (int j = i; j < np; ++j)
      for (int l = j; l < np; ++l) {
        SchubertVector left = quantum_product(m.basis_product(parts[size_t(i)], parts[size_t(j)]),
                                              m.unit_class(parts[size_t(l)]), m);
        SchubertVector right = quantum_product(m.unit_class(parts[size_t(i)]),
                                               m.basis_product(parts[size_t(j)], parts[size_t(l)]), m);
        rep.record(left == right, "associativity fails at (" + parts[size_t(i)].str() + ", " +
                                      parts[size_t(j)].str() + ", " + parts[size_t(l)].str() + ")");
      }

  // (d) composition law at r=2: both pair splittings give the 4-point value
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, np - 1);
  for (int t = 0; t < composition_tuples; ++t) {
    const BoxPartition& a = parts[size_t(pick(rng))];
    const BoxPartition& b = parts[size_t(pick(rng))];
    const BoxPartition& c = parts[size_t(pick(rng))];
    const BoxPartition& d = parts[size_t(pick(rng))];
    auto three_point = [&](const SchubertVector& xy, const BoxPartition& z) {
      // sum_nu <x,y,nu> <nu*, z, .>-free form: coefficient extraction
      return quantum_product(xy, m.unit_class(z), m).coefficient(m.full_box());
    };
    // split (ab|cd): sum_nu coeff_nu(a*b) * <sigma_nu, c, d>
    QPolynomial s1;
    for (const auto& [nu, coeff] : m.basis_product(a, b).entries())
      s1 += coeff * three_point(m.basis_product(c, d), nu);
    // split (ac|bd)
    QPolynomial s2;
    for (const auto& [nu, coeff] : m.basis_product(a, c).entries())
      s2 += coeff * three_point(m.basis_product(b, d), nu);
    rep.record(s1 == s2, "composition law fails at (" + a.str() + "," + b.str() + "," + c.str() +
                             "," + d.str() + ")");
  }

  // monitored enumerative positivity: record, never fail
  int negative = 0;
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& [nu, coeff] : m.basis_product(a, b).entries())
        for (const auto& [d, value] : coeff.entries())
          if (value < 0) ++negative;
  rep.notes.push_back("negative structure constants: " + std::to_string(negative));
  return rep;
}

} // namespace qcg
