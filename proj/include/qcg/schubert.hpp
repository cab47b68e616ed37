#ifndef QCG_SCHUBERT_HPP
#define QCG_SCHUBERT_HPP

#include <map>
#include <vector>

#include "qcg/groebner.hpp"
#include "qcg/partition.hpp"
#include "qcg/qpolynomial.hpp"
#include "qcg/wpoly.hpp"

namespace qcg {

// Exact linear combination of box partitions with coefficients in Q[q].
class SchubertVector {
public:
  SchubertVector() = default;
  explicit SchubertVector(GrassSpec spec) : spec_(spec) {}

  const GrassSpec& spec() const { return spec_; }
  bool is_zero() const { return entries_.empty(); }
  size_t term_count() const { return entries_.size(); }

  const std::map<BoxPartition, QPolynomial, PartitionLess>& entries() const { return entries_; }

  QPolynomial coefficient(const BoxPartition& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? QPolynomial() : it->second;
  }

  void add(const BoxPartition& p, const QPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = entries_.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  SchubertVector& operator+=(const SchubertVector& o) {
    for (const auto& [p, c] : o.entries_) add(p, c);
    return *this;
  }
  friend SchubertVector operator+(SchubertVector a, const SchubertVector& b) { return a += b; }

  SchubertVector& scale(const QPolynomial& s) {
    if (s.is_zero()) {
      entries_.clear();
      return *this;
    }
    for (auto& [p, c] : entries_) c = c * s;
    return *this;
  }

  bool operator==(const SchubertVector& o) const { return entries_ == o.entries_; }
  bool operator!=(const SchubertVector& o) const { return !(*this == o); }

  std::string str() const;

private:
  GrassSpec spec_;
  std::map<BoxPartition, QPolynomial, PartitionLess> entries_;
};

// All partitions in the k x (n-k) box, canonical order; count = C(n,k).
std::vector<BoxPartition> box_partitions(const GrassSpec& spec);

// Complement-reversed partition; an involution on the box.
BoxPartition dual_partition(const BoxPartition& p, const GrassSpec& spec);

// Segre classes Y_1..Y_n as polynomials in X_1..X_k via the recursion
// Y_j = -Y_{j-1} X_1 - ... - Y_1 X_{j-1} - X_j (X_i = 0 for i > k).
std::vector<WPolynomial> segre_from_chern(const GrassSpec& spec);

// Inverse recursion c_m = -s_m - sum_{i<m} c_i s_{m-i} evaluated on given
// Segre polynomials; returns c_1..c_n (c_i = X_i for i <= k, then 0).
std::vector<WPolynomial> chern_from_segre(const GrassSpec& spec,
                                          const std::vector<WPolynomial>& segre);

// Jacobi-Trudi determinant det(Y_{lambda_i + j - i}) on the Segre classes.
WPolynomial schur_polynomial(const BoxPartition& p, const GrassSpec& spec);

// Classical Pieri rule: all ways of adding a horizontal r-strip inside the
// box.  Coefficients are 1; classes leaving the box drop out.
SchubertVector pieri_product(const BoxPartition& p, int r, const GrassSpec& spec);

// Classical (q-free) product via the Jacobi-Trudi expansion of mu into row
// classes and iterated Pieri; the independent cup-product oracle.
SchubertVector classical_product(const BoxPartition& lambda, const BoxPartition& mu,
                                 const GrassSpec& spec);

// Classical Poincare pairing <lambda, mu>: coefficient of the full box in
// the classical product (1 iff mu is the dual of lambda).
Rational classical_pairing(const BoxPartition& lambda, const BoxPartition& mu,
                           const GrassSpec& spec);

// Change of basis between the quotient basis of a quantum model and the
// Schubert classes.  The mixed-weight system is block-triangular: partitions
// of size s only touch basis monomials of weight s - n*d, so solving runs
// from the top weight downward with exact rational block inverses.
class SchurTransform {
public:
  SchurTransform(const GrassSpec& spec, const GroebnerModel& model);

  const std::vector<BoxPartition>& partitions() const { return partitions_; }
  const WPolynomial& schur_poly(const BoxPartition& p) const;

  // Expresses NF(F) in the Schubert classes; exact, throws on the (never
  // expected) singular change of basis.
  SchubertVector to_schubert(const WPolynomial& f) const;

  // Representative polynomial of a Schubert vector.
  WPolynomial from_schubert(const SchubertVector& v) const;

  // Coefficient of the full-box class in to_schubert(basis monomial i);
  // the top-degree functional used by the genus pipelines.
  const QPolynomial& box_functional(int basis_index) const { return tau_[size_t(basis_index)]; }

  const GroebnerModel& model() const { return *model_; }

private:
  GrassSpec spec_;
  const GroebnerModel* model_;
  std::vector<BoxPartition> partitions_;
  std::map<BoxPartition, int, PartitionLess> partition_index_;
  std::vector<WPolynomial> schur_polys_;
  // nf_coords_[p][b] = coordinate of NF(schur_p) at basis monomial b.
  std::vector<std::vector<QPolynomial>> nf_coords_;
  // Per partition-size block: partition indices, basis-monomial indices of
  // matching weight, and the exact inverse of the classical block.
  struct Block {
    std::vector<int> partition_ids;
    std::vector<int> basis_ids;
    std::vector<std::vector<Rational>> inverse;
  };
  std::vector<Block> blocks_; // indexed by partition size 0..N
  std::vector<QPolynomial> tau_;

  void build_blocks();
};

} // namespace qcg

#endif
