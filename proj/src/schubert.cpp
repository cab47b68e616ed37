#include "qcg/schubert.hpp"

#include <algorithm>
#include <functional>

namespace qcg {

BoxPartition parse_partition(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw UsageError("unbalanced '[' in partition: " + text);
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw UsageError("empty part in partition: " + text);
    size_t pos = 0;
    int v = std::stoi(cur, &pos);
    if (pos != cur.size() || v < 0) throw UsageError("bad partition part: " + cur);
    parts.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ' ') continue;
    if (ch == ',')
      flush();
    else if (ch >= '0' && ch <= '9')
      cur += ch;
    else
      throw UsageError("bad character in partition: " + text);
  }
  if (!cur.empty()) flush();
  return BoxPartition(parts);
}

std::vector<BoxPartition> box_partitions(const GrassSpec& spec) {
  std::vector<BoxPartition> out;
  std::vector<int> cur(size_t(spec.k), 0);
  std::function<void(int, int)> rec = [&](int row, int maxval) {
    if (row == spec.k) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= maxval; ++v) {
      cur[size_t(row)] = v;
      rec(row + 1, v);
    }
    cur[size_t(row)] = 0;
  };
  rec(0, spec.box_width());
  std::sort(out.begin(), out.end(), partition_before);
  return out;
}

BoxPartition dual_partition(const BoxPartition& p, const GrassSpec& spec) {
  if (!p.fits(spec)) throw UsageError("partition does not fit the box");
  std::vector<int> parts(size_t(spec.k));
  for (int i = 0; i < spec.k; ++i)
    parts[size_t(i)] = spec.box_width() - p.part(spec.k - 1 - i);
  return BoxPartition(parts);
}

std::vector<WPolynomial> segre_from_chern(const GrassSpec& spec) {
  const int k = spec.k, n = spec.n;
  std::vector<WPolynomial> y; // y[j] = Y_j, with Y_0 = 1
  y.push_back(WPolynomial::constant(k, Rational(1)));
  for (int j = 1; j <= n; ++j) {
    WPolynomial s(k);
    for (int i = 1; i <= std::min(j, k); ++i) s -= y[size_t(j - i)] * WPolynomial::variable(k, i - 1);
    y.push_back(std::move(s));
  }
  return std::vector<WPolynomial>(y.begin() + 1, y.end()); // Y_1..Y_n
}

std::vector<WPolynomial> chern_from_segre(const GrassSpec& spec,
                                          const std::vector<WPolynomial>& segre) {
  const int k = spec.k, n = spec.n;
  std::vector<WPolynomial> c;
  c.push_back(WPolynomial::constant(k, Rational(1))); // c_0 = 1
  for (int m = 1; m <= n; ++m) {
    WPolynomial v(k);
    for (int i = 0; i < m; ++i) v -= c[size_t(i)] * segre[size_t(m - i - 1)];
    c.push_back(std::move(v));
  }
  return std::vector<WPolynomial>(c.begin() + 1, c.end()); // c_1..c_n
}

WPolynomial schur_polynomial(const BoxPartition& p, const GrassSpec& spec) {
  if (!p.fits(spec)) throw UsageError("partition does not fit the box");
  const int k = spec.k;
  auto segre = segre_from_chern(spec);
  auto Y = [&](int j) -> WPolynomial {
    if (j < 0) return WPolynomial::zero(k);
    if (j == 0) return WPolynomial::constant(k, Rational(1));
    return segre[size_t(j - 1)];
  };
  std::vector<std::vector<WPolynomial>> mat(static_cast<size_t>(k), std::vector<WPolynomial>(static_cast<size_t>(k)));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) mat[size_t(i - 1)][size_t(j - 1)] = Y(p.part(i - 1) + j - i);
  return poly_determinant(mat, k);
}

SchubertVector pieri_product(const BoxPartition& p, int r, const GrassSpec& spec) {
  if (!p.fits(spec)) throw UsageError("partition does not fit the box");
  if (r < 0 || r > spec.box_width()) throw UsageError("Pieri row out of range");
  SchubertVector out(spec);
  std::vector<int> mu(size_t(spec.k), 0);
  // mu_i in [lambda_i, min(upper, lambda_{i-1})], total growth r; horizontal
  // strip condition is mu_{i+1} <= lambda_i.
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (row == spec.k) {
      if (remaining == 0) out.add(BoxPartition(mu), QPolynomial(Rational(1)));
      return;
    }
    int lo = p.part(row);
    int hi = row == 0 ? spec.box_width() : std::min(p.part(row - 1), spec.box_width());
    for (int v = lo; v <= std::min(hi, lo + remaining); ++v) {
      mu[size_t(row)] = v;
      rec(row + 1, remaining - (v - lo));
    }
    mu[size_t(row)] = 0;
  };
  rec(0, r);
  return out;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

} // namespace

SchubertVector classical_product(const BoxPartition& lambda, const BoxPartition& mu,
                                 const GrassSpec& spec) {
  if (!lambda.fits(spec) || !mu.fits(spec)) throw UsageError("partition does not fit the box");
  SchubertVector out(spec);
  const int k = spec.k;
  std::vector<int> perm(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) perm[size_t(i)] = i + 1;
  // sigma_mu = sum_w sgn(w) prod_i h_{mu_i - i + w(i)}, rows applied by
  // iterated Pieri; h_r = 0 outside [0, n-k].
  do {
    std::vector<int> rows;
    bool dead = false;
    for (int i = 1; i <= k && !dead; ++i) {
      int r = mu.part(i - 1) - i + perm[size_t(i - 1)];
      if (r < 0 || r > spec.box_width()) dead = true;
      if (r > 0) rows.push_back(r);
    }
    if (dead) continue;
    int sign = permutation_sign(perm);
    std::map<BoxPartition, Rational, PartitionLess> acc;
    acc[lambda] = Rational(sign);
    for (int r : rows) {
      std::map<BoxPartition, Rational, PartitionLess> next;
      for (const auto& [part, coeff] : acc) {
        SchubertVector strip = pieri_product(part, r, spec);
        for (const auto& [target, one] : strip.entries()) next[target] += coeff;
      }
      acc = std::move(next);
    }
    for (const auto& [part, coeff] : acc)
      if (coeff != 0) out.add(part, QPolynomial(coeff));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Rational classical_pairing(const BoxPartition& lambda, const BoxPartition& mu,
                           const GrassSpec& spec) {
  std::vector<int> full(size_t(spec.k), spec.box_width());
  return classical_product(lambda, mu, spec).coefficient(BoxPartition(full)).constant_value();
}

std::string SchubertVector::str() const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : entries_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*s[" + p.str() + "]";
  }
  return s;
}

// ---------------------------------------------------------------------------
// SchurTransform

namespace {

std::vector<std::vector<Rational>> invert_rational(std::vector<std::vector<Rational>> a) {
  const int n = int(a.size());
  std::vector<std::vector<Rational>> inv(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) inv[size_t(i)][size_t(i)] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[size_t(r)][size_t(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      throw InconsistencyError("model inconsistency: singular Schubert change of basis");
    std::swap(a[size_t(col)], a[size_t(pivot)]);
    std::swap(inv[size_t(col)], inv[size_t(pivot)]);
    Rational d = a[size_t(col)][size_t(col)];
    for (int j = 0; j < n; ++j) {
      a[size_t(col)][size_t(j)] /= d;
      inv[size_t(col)][size_t(j)] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = a[size_t(r)][size_t(col)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a[size_t(r)][size_t(j)] -= f * a[size_t(col)][size_t(j)];
        inv[size_t(r)][size_t(j)] -= f * inv[size_t(col)][size_t(j)];
      }
    }
  }
  return inv;
}

WPolynomial lift_qpolynomial(const QPolynomial& c, int nvars) {
  WPolynomial p(nvars);
  for (const auto& [d, v] : c.entries()) p += WPolynomial::q_power(nvars, d, v);
  return p;
}

} // namespace

SchurTransform::SchurTransform(const GrassSpec& spec, const GroebnerModel& model)
    : spec_(spec), model_(&model) {
  partitions_ = box_partitions(spec);
  for (int i = 0; i < int(partitions_.size()); ++i) partition_index_[partitions_[size_t(i)]] = i;
  schur_polys_.reserve(partitions_.size());
  nf_coords_.reserve(partitions_.size());
  for (const auto& p : partitions_) {
    WPolynomial s = schur_polynomial(p, spec);
    schur_polys_.push_back(s);
    nf_coords_.push_back(model.coordinates(model.normal_form(s)));
  }
  build_blocks();
  tau_.resize(size_t(model.dimension));
  for (int b = 0; b < model.dimension; ++b) {
    WPolynomial unit =
        WPolynomial::monomial(model.nvars, model.quotient_basis[size_t(b)], Rational(1));
    std::vector<int> full(size_t(spec.k), spec.box_width());
    tau_[size_t(b)] = to_schubert(unit).coefficient(BoxPartition(full));
  }
}

const WPolynomial& SchurTransform::schur_poly(const BoxPartition& p) const {
  auto it = partition_index_.find(p);
  if (it == partition_index_.end()) throw UsageError("partition does not fit the box");
  return schur_polys_[size_t(it->second)];
}

void SchurTransform::build_blocks() {
  const int N = spec_.dimension();
  blocks_.assign(size_t(N) + 1, Block{});
  for (int i = 0; i < int(partitions_.size()); ++i)
    blocks_[size_t(partitions_[size_t(i)].size())].partition_ids.push_back(i);
  for (int b = 0; b < model_->dimension; ++b) {
    long w = model_->basis_weight(b);
    if (w > N) throw InconsistencyError("basis monomial above the top weight");
    blocks_[size_t(w)].basis_ids.push_back(b);
  }
  for (int s = 0; s <= N; ++s) {
    Block& blk = blocks_[size_t(s)];
    if (blk.partition_ids.size() != blk.basis_ids.size())
      throw InconsistencyError("weight census mismatch between partitions and basis monomials");
    const int m = int(blk.partition_ids.size());
    if (m == 0) continue;
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(m)));
    for (int col = 0; col < m; ++col)
      for (int row = 0; row < m; ++row)
        mat[size_t(row)][size_t(col)] =
            nf_coords_[size_t(blk.partition_ids[size_t(col)])][size_t(blk.basis_ids[size_t(row)])]
                .coeff(0);
    blk.inverse = invert_rational(std::move(mat));
  }
}

SchubertVector SchurTransform::to_schubert(const WPolynomial& f) const {
  std::vector<QPolynomial> v = model_->coordinates(model_->normal_form(f));
  std::vector<QPolynomial> x(partitions_.size());
  const int N = spec_.dimension();
  for (int s = N; s >= 0; --s) {
    const Block& blk = blocks_[size_t(s)];
    const int m = int(blk.partition_ids.size());
    if (m == 0) continue;
    for (int col = 0; col < m; ++col) {
      QPolynomial xi;
      for (int row = 0; row < m; ++row) {
        const QPolynomial& r = v[size_t(blk.basis_ids[size_t(row)])];
        if (!r.is_zero()) xi += r * blk.inverse[size_t(col)][size_t(row)];
      }
      x[size_t(blk.partition_ids[size_t(col)])] = std::move(xi);
    }
    // Remove the solved classes from the residual.
    for (int col = 0; col < m; ++col) {
      int pid = blk.partition_ids[size_t(col)];
      const QPolynomial& xi = x[size_t(pid)];
      if (xi.is_zero()) continue;
      const auto& coords = nf_coords_[size_t(pid)];
      for (int b = 0; b < model_->dimension; ++b)
        if (!coords[size_t(b)].is_zero()) v[size_t(b)] -= xi * coords[size_t(b)];
    }
  }
  for (const auto& r : v)
    if (!r.is_zero())
      throw InconsistencyError("model inconsistency: Schubert solve left a residual");
  SchubertVector out(spec_);
  for (size_t i = 0; i < partitions_.size(); ++i)
    if (!x[i].is_zero()) out.add(partitions_[i], x[i]);
  return out;
}

WPolynomial SchurTransform::from_schubert(const SchubertVector& v) const {
  WPolynomial p(model_->nvars);
  for (const auto& [part, coeff] : v.entries())
    p += lift_qpolynomial(coeff, model_->nvars) * schur_poly(part);
  return p;
}

} // namespace qcg
