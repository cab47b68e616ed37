#ifndef QCG_PARTITION_HPP
#define QCG_PARTITION_HPP

#include <string>
#include <vector>

#include "qcg/errors.hpp"
#include "qcg/rational.hpp"

namespace qcg {

// The pair (k, n) with its derived constants.
struct GrassSpec {
  int k = 1;
  int n = 2;

  GrassSpec() = default;
  GrassSpec(int k_, int n_) : k(k_), n(n_) {
    if (k < 1 || k >= n) throw UsageError("invalid Grassmannian spec: need 1 <= k < n");
    if (k > 8) throw UsageError("invalid Grassmannian spec: k > 8 unsupported");
  }

  int box_width() const { return n - k; }        // n - k
  int dimension() const { return k * (n - k); }  // N = k(n-k)
  Integer rank() const { return binomial(n, k); } // C(n,k)

  bool operator==(const GrassSpec& o) const { return k == o.k && n == o.n; }
  bool operator!=(const GrassSpec& o) const { return !(*this == o); }
};

// Partition in the k x (n-k) box.  Parts are weakly decreasing positive
// integers; trailing zeros are trimmed so equality is structural.
class BoxPartition {
public:
  BoxPartition() = default;
  explicit BoxPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
      if (parts_[i] < parts_[i + 1]) throw UsageError("partition parts must be weakly decreasing");
    for (int p : parts_)
      if (p < 0) throw UsageError("partition parts must be non-negative");
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return int(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[size_t(i)] : 0; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  bool empty() const { return parts_.empty(); }

  bool fits(const GrassSpec& spec) const {
    return length() <= spec.k && part(0) <= spec.box_width();
  }

  bool operator==(const BoxPartition& o) const { return parts_ == o.parts_; }
  bool operator!=(const BoxPartition& o) const { return !(*this == o); }

  // "2,1" text form; the empty partition prints as "0".
  std::string str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  // JSON key form "[2,1]"; the empty partition is "[]".
  std::string key() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

private:
  std::vector<int> parts_;
};

// Canonical order: by size, then lexicographically descending.  This is the
// serialization order of every partition-indexed output.
inline bool partition_before(const BoxPartition& a, const BoxPartition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i)
    if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
  return false;
}

struct PartitionLess {
  bool operator()(const BoxPartition& a, const BoxPartition& b) const {
    return partition_before(a, b);
  }
};

// Accepts "2,1", "[2,1]", "0", and "" (empty partition); trailing zeros may
// be omitted or included.
BoxPartition parse_partition(const std::string& text);

} // namespace qcg

#endif
