#ifndef QCG_QRING_HPP
#define QCG_QRING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcg/schubert.hpp"

namespace qcg {

// The quantum relation system (Y_{n-k+1}, ..., Y_{n-1}, Y_n + (-1)^k q)
// together with its classical initial forms.
struct RelationSystem {
  GrassSpec spec;
  QMode q_mode = QMode::formal;
  Rational q_value = 0;
  std::vector<WPolynomial> relations;
  std::vector<WPolynomial> classical_relations;
};

// Builds the relation system and verifies the standard-basis invariant:
// the initial form of f_i is exactly the classical relation s_{n-k+i}.
RelationSystem build_relations(const GrassSpec& spec, QMode mode = QMode::formal,
                               const Rational& q_value = 0);

// The quantum cohomology ring of G(k,n) in computable form: Groebner model
// of the quantum relations, Schubert change of basis, handle element, and
// cached multiplication data.
class QuantumModel {
public:
  explicit QuantumModel(const GrassSpec& spec, QMode mode = QMode::formal,
                        const Rational& q_value = 0, bool corrupt = false);

  const GrassSpec& spec() const { return spec_; }
  const RelationSystem& system() const { return system_; }
  const GroebnerModel& groebner() const { return *groebner_; }
  const SchurTransform& schur() const { return *schur_; }
  const std::vector<BoxPartition>& partitions() const { return partitions_; }
  const BoxPartition& full_box() const { return full_box_; }

  // Handle element E = sum_lambda sigma_lambda ^ sigma_lambda*, as a
  // Schubert vector and as a reduced representative polynomial.
  const SchubertVector& handle_element() const { return handle_vector_; }
  const WPolynomial& handle_poly() const { return handle_nf_; }

  // sigma_lambda as a Schubert vector.
  SchubertVector unit_class(const BoxPartition& p) const;

  // Product of two basis classes, cached.
  const SchubertVector& basis_product(const BoxPartition& a, const BoxPartition& b) const;

  // Coefficient of the full-box class; the top-degree functional <.>_0.
  QPolynomial box_coefficient(const WPolynomial& f) const;

  int dimension() const { return groebner_->dimension; }

private:
  GrassSpec spec_;
  RelationSystem system_;
  std::unique_ptr<GroebnerModel> groebner_;
  std::unique_ptr<SchurTransform> schur_;
  std::vector<BoxPartition> partitions_;
  BoxPartition full_box_;
  SchubertVector handle_vector_;
  WPolynomial handle_nf_;
  mutable std::map<std::pair<int, int>, SchubertVector> product_cache_;
  std::map<BoxPartition, int, PartitionLess> partition_index_;
};

// sigma-basis quantum product; bilinear over Q[q].
SchubertVector quantum_product(const SchubertVector& a, const SchubertVector& b,
                               const QuantumModel& m);

// Genus-0 three-point Gromov-Witten constant: the coefficient of
// q^d sigma_{nu*} in sigma_lambda ^ sigma_mu.  Zero when the dimension
// condition |lambda|+|mu|+|nu| = k(n-k) + d n fails; always an integer.
Integer gw3(const BoxPartition& lambda, const BoxPartition& mu, const BoxPartition& nu, int d,
            const QuantumModel& m);

// Exact genus-g invariant <F>_g: coefficient of the full-box class in
// E^g * F.  This is the ground-truth pipeline.
QPolynomial genus_invariant_exact(const WPolynomial& f, int genus, const QuantumModel& m);

// Exact invariants for every monomial X^J of weight <= weight_bound and
// every genus 0..genus_max, computed incrementally with the variable
// multiplication operators.
std::vector<std::pair<Monomial, std::vector<QPolynomial>>> genus_invariant_sweep(
    const QuantumModel& m, long weight_bound, int genus_max);

struct SelfcheckReport {
  bool passed = true;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

// Verifies (a) the theorem relations vanish, (b) associativity over all
// basis triples, (c) the quantum Poincare pairing is the duality
// permutation, (d) the r=2 composition law on random 4-tuples, and that
// every q^0 structure constant matches the classical Pieri oracle.
SelfcheckReport ring_selfcheck(const QuantumModel& m, uint64_t seed = 1,
                               int composition_tuples = 100);

} // namespace qcg

#endif
