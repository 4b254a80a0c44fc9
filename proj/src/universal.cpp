#include "antinv/universal.hpp"

#include "antinv/counting.hpp"

namespace antinv {
namespace {

void require_nl(long n, long l) {
  if (l < 0 || 2 * l > n) throw std::invalid_argument("need 0 <= 2l <= n");
}

std::vector<QPoly> scaled(const std::vector<QPoly>& v, const QPoly& s) {
  std::vector<QPoly> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

void add_into(std::vector<QPoly>& acc, const std::vector<QPoly>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

void sub_into(std::vector<QPoly>& acc, const std::vector<QPoly>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= v[i];
}

}  // namespace

PairClassRecurrence::PairClassRecurrence(long n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative ambient dimension");
}

const std::vector<QPoly>& PairClassRecurrence::get(long a, long b) {
  if (b < 0 || a < b || a > n_) throw std::invalid_argument("need 0 <= b <= a <= n");
  auto key = std::make_pair(a, b);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (!in_progress_.insert(key).second)
    throw std::logic_error("pair-class recurrence cycled; termination order violated");
  std::vector<QPoly> value = compute(a, b);
  in_progress_.erase(key);
  return memo_.emplace(key, std::move(value)).first->second;
}

std::vector<QPoly> PairClassRecurrence::compute(long a, long b) {
  std::vector<QPoly> out(static_cast<std::size_t>(n_) + 1);
  if (a == b) {
    out[static_cast<std::size_t>(a)] = QPoly(Int(1));
    return out;
  }
  out[static_cast<std::size_t>(b)] += qbinom(n_ - b, a - b);
  out[static_cast<std::size_t>(a)] -= qbinom(a, b);
  for (long j = 0; j < b; ++j)
    add_into(out, scaled(get(b, j), qbinom(n_ - 2 * b + j, a - 2 * b + j)));
  for (long k = b + 1; k < a; ++k) sub_into(out, scaled(get(a, k), qbinom(k, b)));
  return out;
}

UniversalFormula universal_by_recurrence(long n, long l) {
  require_nl(n, l);
  PairClassRecurrence engine(n);
  const std::vector<QPoly>& full = engine.get(l, 0);
  UniversalFormula uf{n, l, {}};
  uf.p.assign(full.begin(), full.begin() + l + 1);
  for (std::size_t j = static_cast<std::size_t>(l) + 1; j < full.size(); ++j)
    if (!full[j].is_zero())
      throw std::logic_error("pair-class expansion touched X_j with j > l");
  return uf;
}

std::vector<std::vector<QPoly>> witness_matrix(long n, long l) {
  require_nl(n, l);
  std::vector<std::vector<QPoly>> m(static_cast<std::size_t>(l) + 1,
                                    std::vector<QPoly>(static_cast<std::size_t>(l) + 1));
  for (long j = 0; j <= l; ++j) {
    m[0][static_cast<std::size_t>(j)] = (j == 0 || j == n) ? QPoly(Int(1)) : QPoly();
    if (l >= 1) m[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] = qbinom(n, j);
  }
  for (long i = 1; i < l; ++i)
    for (long j = 0; j <= l; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          qbinom(n - l + i, j) + qbinom(n - l + i, j - l + i);
  return m;
}

long witness_entry_degree(long n, long l, long i, long j) {
  if (i < 1 || i > l || j < 0 || j > l)
    throw std::invalid_argument("witness entry degree defined for 1 <= i <= l, 0 <= j <= l");
  return j * (n - l + i - j);
}

UniversalFormula universal_by_system(long n, long l) {
  require_nl(n, l);
  auto wm = witness_matrix(n, l);
  std::vector<std::vector<RatFn>> m(wm.size(), std::vector<RatFn>(wm.size()));
  for (std::size_t i = 0; i < wm.size(); ++i)
    for (std::size_t j = 0; j < wm.size(); ++j) m[i][j] = RatFn(wm[i][j]);
  std::vector<RatFn> rhs(wm.size());
  // Row 0 is the full irreducible companion; its anti-invariant count is the
  // profile count for (n-l, l).  All other witness rows have count zero.
  rhs[0] = (l == 0) ? RatFn(1) : RatFn(profile_count_irreducible({n - l, l}));
  std::vector<RatFn> sol = fraction_solve(std::move(m), std::move(rhs));
  UniversalFormula uf{n, l, {}};
  uf.p.reserve(sol.size());
  for (const RatFn& f : sol) uf.p.push_back(f.to_qpoly());
  return uf;
}

UniversalFormula universal_closed_form(long n, long l) {
  require_nl(n, l);
  UniversalFormula uf{n, l, {}};
  uf.p.reserve(static_cast<std::size_t>(l) + 1);
  for (long j = 0; j <= l; ++j) {
    QPoly inner = qbinom(n - l - j, n - 2 * l) *
                      QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l - j + 1))) +
                  qbinom(n - l - j - 1, n - 2 * l) *
                      QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l - j)));
    QPoly pj = QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l))) * inner;
    uf.p.push_back(j % 2 == 0 ? pj : -pj);
  }
  return uf;
}

QPoly zero_sum_value(long n, long l, long i) {
  require_nl(n, l);
  if (i < 1 || i > l) throw std::invalid_argument("zero-sum index needs 1 <= i <= l");
  QPoly out;
  for (long j = 0; j <= l; ++j) {
    QPoly y = qbinom(n - l + i, j) + qbinom(n - l + i, j - l + i) -
              qbinom(n - l + i, j - 1) - qbinom(n - l + i, j - 1 - l + i);
    QPoly term = y * qbinom(n - l - j, n - 2 * l) *
                 QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l - j + 1)));
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

RatFn zero_sum_component(long n, long l, long i, int which, SumMethod method) {
  require_nl(n, l);
  if (l < 1) throw std::invalid_argument("components need l >= 1");
  if (i < 1 || i > l) throw std::invalid_argument("component index needs 1 <= i <= l");
  if (which < 1 || which > 4) throw std::invalid_argument("component selector must be 1..4");
  const long m = n - l;
  if (method == SumMethod::kBinomial) {
    QPoly out;
    for (long j = 0; j <= l; ++j) {
      long top;
      switch (which) {
        case 1: top = j; break;
        case 2: top = j - l + i; break;
        case 3: top = j - 1; break;
        default: top = j - 1 - l + i; break;
      }
      QPoly term = qbinom(m + i, top) * qbinom(m - j, n - 2 * l) *
                   QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l - j + 1)));
      out = (j % 2 == 0) ? out + term : out - term;
    }
    return RatFn(out);
  }
  RatFn sign = (l % 2 == 0) ? RatFn(1) : RatFn(-1);
  switch (which) {
    case 1:
      return sign * RatFn(qpoch(m + i - l + 1, l), qpoch(1, l)) *
             phi21_terminating(l, m - l + 1, m + i - l + 1, l + 1);
    case 2:
      return sign * RatFn(qpoch(m + 1, i), qpoch(1, i)) *
             phi21_terminating(i, m - l + 1, m + 1, i + 1);
    case 3:
      return sign * RatFn(qpoch(m + i - l + 2, l - 1), qpoch(1, l - 1)) *
             phi21_terminating(l - 1, m - l + 1, m + i - l + 2, l);
    default:
      return sign * RatFn(qpoch(m + 2, i - 1), qpoch(1, i - 1)) *
             phi21_terminating(i - 1, m - l + 1, m + 2, i);
  }
}

RatFn zero_sum_component_heine(long n, long l, long i, int pair) {
  require_nl(n, l);
  if (l < 1) throw std::invalid_argument("components need l >= 1");
  if (i < 1 || i > l) throw std::invalid_argument("component index needs 1 <= i <= l");
  const long m = n - l;
  RatFn sign = (l % 2 == 0) ? RatFn(1) : RatFn(-1);
  if (pair == 1) {
    // S1's prefactor, with its series traded for S4's under Heine.
    RatFn pre = RatFn(qpoch(m + i - l + 1, l), qpoch(1, l));
    RatFn pq = poch_inf_quotient({{i, m + 2}, {m + i - l + 1, l + 1}});
    return sign * pre * pq * phi21_terminating(i - 1, m - l + 1, m + 2, i);
  }
  if (pair == 2) {
    // S3's prefactor, with its series traded for S2's under Heine.
    RatFn pre = RatFn(qpoch(m + i - l + 2, l - 1), qpoch(1, l - 1));
    RatFn pq = poch_inf_quotient({{i + 1, m + 1}, {m + i - l + 2, l}});
    return sign * pre * pq * phi21_terminating(i, m - l + 1, m + 1, i + 1);
  }
  throw std::invalid_argument("pair selector must be 1 or 2");
}

namespace {

QPoly poly_det(const std::vector<std::vector<QPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return QPoly(Int(1));
  if (n == 1) return m[0][0];
  QPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<QPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QPoly> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    QPoly term = m[0][c] * poly_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

DetDegreeReport det_degree_check(long n, long l) {
  require_nl(n, l);
  if (l < 1) throw std::invalid_argument("determinant check needs l >= 1");
  auto wm = witness_matrix(n, l);
  std::vector<std::vector<QPoly>> minor(static_cast<std::size_t>(l),
                                        std::vector<QPoly>(static_cast<std::size_t>(l)));
  for (long i = 1; i <= l; ++i)
    for (long j = 1; j <= l; ++j)
      minor[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          wm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  DetDegreeReport report;
  report.det = poly_det(minor);
  report.expected_degree = (n - l) * l * (l + 1) / 2;
  report.pass = !report.det.is_zero() && report.det.degree() == report.expected_degree;
  return report;
}

}  // namespace antinv
