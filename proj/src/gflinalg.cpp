#include "antinv/gflinalg.hpp"

#include <algorithm>

#include "antinv/qseries.hpp"

namespace antinv {
namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw std::invalid_argument("operands live over different fields");
}

}  // namespace

MatGF::MatGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {
  if (!field_) throw std::invalid_argument("null field");
}

MatGF MatGF::identity(FieldPtr field, std::size_t n) {
  MatGF m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field()->one();
  return m;
}

MatGF operator*(const MatGF& a, const MatGF& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  const FieldCtx& f = *a.field();
  MatGF r(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      FE aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return r;
}

MatGF MatGF::transpose() const {
  MatGF r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool operator==(const MatGF& a, const MatGF& b) {
  return same_field(a.field(), b.field()) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

std::vector<std::size_t> rref(MatGF& m) {
  const FieldCtx& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r)
      if (!f.is_zero(m.at(r, col))) {
        sel = r;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    FE piv_inv = f.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), piv_inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      FE factor = m.at(r, col);
      if (f.is_zero(factor)) continue;
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Subspace kernel(const MatGF& m) {
  MatGF r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  const FieldCtx& f = *m.field();
  std::vector<std::vector<FE>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FE> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r.at(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::from_span(m.field(), m.cols(), basis);
}

Subspace Subspace::from_span(FieldPtr field, std::size_t ambient,
                             const std::vector<std::vector<FE>>& vectors) {
  MatGF m(field, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient)
      throw std::invalid_argument("spanning vector has wrong length");
    for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
  }
  return from_rows(std::move(m));
}

Subspace Subspace::from_rows(MatGF rows) {
  std::size_t ambient = rows.cols();
  std::vector<std::size_t> pivots = rref(rows);
  MatGF basis(rows.field(), pivots.size(), ambient);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis.at(i, j) = rows.at(i, j);
  return Subspace(std::move(basis));
}

Subspace Subspace::zero_subspace(FieldPtr field, std::size_t ambient) {
  return Subspace(MatGF(std::move(field), 0, ambient));
}

Subspace Subspace::full_space(FieldPtr field, std::size_t ambient) {
  return Subspace(MatGF::identity(std::move(field), ambient));
}

bool Subspace::contains(const std::vector<FE>& v) const {
  if (v.size() != ambient()) throw std::invalid_argument("vector has wrong length");
  const FieldCtx& f = *field();
  std::vector<FE> w = v;
  // Reduce against the RREF basis row by row.
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    while (col < ambient() && f.is_zero(basis_.at(i, col))) ++col;
    if (col >= ambient()) break;
    FE factor = w[col];
    if (!f.is_zero(factor))
      for (std::size_t c = col; c < ambient(); ++c)
        w[c] = f.sub(w[c], f.mul(factor, basis_.at(i, c)));
    ++col;
  }
  for (const FE& x : w)
    if (!f.is_zero(x)) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require_same_field(field(), other.field());
  if (ambient() != other.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    std::vector<FE> v(ambient());
    for (std::size_t j = 0; j < ambient(); ++j) v[j] = other.basis_.at(i, j);
    if (!contains(v)) return false;
  }
  return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto& da = a.basis_.data();
  const auto& db = b.basis_.data();
  return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field());
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  MatGF stacked(a.field(), a.dim() + b.dim(), a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient(); ++j) stacked.at(i, j) = a.basis().at(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.ambient(); ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  return Subspace::from_rows(std::move(stacked));
}

Subspace perp(const Subspace& w) { return kernel(w.basis()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  return perp(sum(perp(a), perp(b)));
}

Subspace apply_operator(const MatGF& t, const Subspace& w) {
  require_same_field(t.field(), w.field());
  if (t.rows() != t.cols() || t.cols() != w.ambient())
    throw std::invalid_argument("operator shape mismatch");
  // Row vector w maps to (T w^T)^T = w T^T.
  return Subspace::from_rows(w.basis() * t.transpose());
}

Subspace preimage(const MatGF& t, const Subspace& w) {
  require_same_field(t.field(), w.field());
  if (t.rows() != t.cols() || t.cols() != w.ambient())
    throw std::invalid_argument("operator shape mismatch");
  return kernel(perp(w).basis() * t);
}

GuardExceeded::GuardExceeded(Int projected, Int guard)
    : std::runtime_error("enumeration of " + projected.get_str(10) +
                         " subspaces exceeds guard of " + guard.get_str(10)),
      projected_(std::move(projected)),
      guard_(std::move(guard)) {}

Int subspace_count(long q, long n, long k) {
  return qbinom(n, k).eval(Int(q));
}

void for_each_subspace(const FieldPtr& field, std::size_t n, std::size_t k,
                       const Int& guard,
                       const std::function<void(const Subspace&)>& fn) {
  if (!field) throw std::invalid_argument("null field");
  if (k > n) return;
  Int projected = subspace_count(field->order(), static_cast<long>(n), static_cast<long>(k));
  if (projected > guard) throw GuardExceeded(projected, guard);
  if (k == 0) {
    fn(Subspace::zero_subspace(field, n));
    return;
  }
  const FieldCtx& f = *field;
  const long q = f.order();

  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    // Free coordinates of the echelon pattern for this pivot set.
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = pivots[i] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(i, c);

    MatGF basis(field, k, n);
    for (std::size_t i = 0; i < k; ++i) basis.at(i, pivots[i]) = f.one();
    std::vector<long> digits(free_pos.size(), 0);
    while (true) {
      fn(Subspace::from_rows(basis));
      // Odometer over the free entries, first position fastest.
      std::size_t pos = 0;
      while (pos < digits.size()) {
        if (++digits[pos] < q) {
          basis.at(free_pos[pos].first, free_pos[pos].second) = f.element(digits[pos]);
          break;
        }
        digits[pos] = 0;
        basis.at(free_pos[pos].first, free_pos[pos].second) = f.zero();
        ++pos;
      }
      if (pos == digits.size()) break;
    }

    // Next pivot set in colexicographic order.
    std::size_t i = 0;
    while (i < k) {
      std::size_t limit = (i + 1 < k) ? pivots[i + 1] : n;
      if (pivots[i] + 1 < limit) break;
      ++i;
    }
    if (i == k) break;
    ++pivots[i];
    for (std::size_t j = 0; j < i; ++j) pivots[j] = j;
  }
}

long random_below(std::mt19937_64& rng, long bound) {
  if (bound <= 0) throw std::invalid_argument("random_below: nonpositive bound");
  const std::uint64_t b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<long>(r % b);
}

MatGF random_matrix(const FieldPtr& field, std::size_t n, std::mt19937_64& rng) {
  MatGF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = field->element(random_below(rng, field->order()));
  return m;
}

}  // namespace antinv
