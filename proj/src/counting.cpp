#include "antinv/counting.hpp"

#include <numeric>

#include "antinv/chords.hpp"
#include "antinv/qseries.hpp"
#include "antinv/ratfn.hpp"

namespace antinv {
namespace {

void require_operator(const MatGF& t) {
  if (t.rows() != t.cols()) throw std::invalid_argument("operator matrix must be square");
}

void validate_profile(const std::vector<long>& profile) {
  if (profile.empty()) throw std::invalid_argument("empty profile");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] <= 0) throw std::invalid_argument("profile parts must be positive");
    if (i > 0 && profile[i] > profile[i - 1])
      throw std::invalid_argument("profile must be weakly decreasing");
  }
}

}  // namespace

Int invariant_count(const MatGF& t, long j, const Int& guard) {
  require_operator(t);
  const std::size_t n = t.rows();
  if (j < 0 || static_cast<std::size_t>(j) > n) return 0;
  Int count = 0;
  for_each_subspace(t.field(), n, static_cast<std::size_t>(j), guard,
                    [&](const Subspace& w) {
                      if (w.contains(apply_operator(t, w))) count += 1;
                    });
  return count;
}

std::vector<Int> invariant_counts(const MatGF& t, const Int& guard) {
  require_operator(t);
  const std::size_t n = t.rows();
  std::vector<Int> xs;
  xs.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    xs.push_back(invariant_count(t, static_cast<long>(j), guard));
  return xs;
}

Int anti_invariant_count(const MatGF& t, long l, const Int& guard) {
  require_operator(t);
  if (l < 0) throw std::invalid_argument("negative dimension");
  if (2 * l > static_cast<long>(t.rows())) return 0;
  Int count = 0;
  for_each_subspace(t.field(), t.rows(), static_cast<std::size_t>(l), guard,
                    [&](const Subspace& w) {
                      if (sum(w, apply_operator(t, w)).dim() == static_cast<std::size_t>(2 * l))
                        count += 1;
                    });
  return count;
}

Int profile_count(const MatGF& t, const std::vector<long>& profile, const Int& guard) {
  require_operator(t);
  validate_profile(profile);
  long total = std::accumulate(profile.begin(), profile.end(), 0L);
  if (total != static_cast<long>(t.rows()))
    throw std::invalid_argument("profile must sum to the ambient dimension");

  std::vector<long> partial(profile.size());
  std::partial_sum(profile.begin(), profile.end(), partial.begin());

  Int count = 0;
  for_each_subspace(t.field(), t.rows(), static_cast<std::size_t>(profile[0]), guard,
                    [&](const Subspace& w) {
                      Subspace s = w;
                      for (std::size_t i = 1; i < profile.size(); ++i) {
                        s = sum(w, apply_operator(t, s));
                        if (s.dim() != static_cast<std::size_t>(partial[i])) return;
                      }
                      count += 1;
                    });
  return count;
}

Int pair_class_count(const MatGF& t, long a, long b, const Int& guard) {
  require_operator(t);
  if (b < 0 || b > a || a > static_cast<long>(t.rows()))
    throw std::invalid_argument("pair class needs 0 <= b <= a <= n");
  Int count = 0;
  for_each_subspace(t.field(), t.rows(), static_cast<std::size_t>(a), guard,
                    [&](const Subspace& w) {
                      if (intersect(w, preimage(t, w)).dim() == static_cast<std::size_t>(b))
                        count += 1;
                    });
  return count;
}

Int anti_invariant_from_counts(long n, long l, const std::vector<Int>& xj, const Int& q) {
  if (l < 0 || 2 * l > n) throw std::invalid_argument("need 0 <= 2l <= n");
  if (xj.size() < static_cast<std::size_t>(l) + 1)
    throw std::invalid_argument("need invariant counts X_0..X_l");
  Int acc = 0;
  for (long j = 0; j <= l; ++j) {
    Int diff = xj[static_cast<std::size_t>(j)] -
               (j > 0 ? xj[static_cast<std::size_t>(j - 1)] : Int(0));
    Int term = diff * qbinom(n - l - j, n - 2 * l).eval(q) *
               int_pow(q, static_cast<unsigned long>(choose2(l - j + 1)));
    acc += (j % 2 == 0) ? term : -term;
  }
  return int_pow(q, static_cast<unsigned long>(choose2(l))) * acc;
}

Int anti_invariant_via_formula(const MatGF& t, long l, const Int& guard) {
  require_operator(t);
  const long n = static_cast<long>(t.rows());
  if (l < 0) throw std::invalid_argument("negative dimension");
  if (2 * l > n) return 0;
  std::vector<Int> xj;
  xj.reserve(static_cast<std::size_t>(l) + 1);
  for (long j = 0; j <= l; ++j) xj.push_back(invariant_count(t, j, guard));
  return anti_invariant_from_counts(n, l, xj, Int(t.field()->order()));
}

QPoly anti_invariant_nilpotent(long n, long l) {
  if (l < 0 || 2 * l > n) throw std::invalid_argument("need 0 <= 2l <= n");
  return QPoly::monomial(Int(1), static_cast<std::size_t>(l * l)) * qbinom(n - l, n - 2 * l);
}

QPoly anti_invariant_irreducible(long n, long l) {
  if (l < 0 || 2 * l > n) throw std::invalid_argument("need 0 <= 2l <= n");
  QPoly inner = qbinom(n - l, n - 2 * l) *
                    QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l + 1))) +
                qbinom(n - l - 1, n - 2 * l) *
                    QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l)));
  return QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l))) * inner;
}

QPoly anti_invariant_diag_distinct(long n, long l) {
  if (l < 0 || 2 * l > n) throw std::invalid_argument("need 0 <= 2l <= n");
  return QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l))) *
         touchard_formula_sum(n, l);
}

QPoly profile_count_irreducible(const std::vector<long>& profile) {
  validate_profile(profile);
  long n = std::accumulate(profile.begin(), profile.end(), 0L);
  // (q^n - 1)/(q^{mu_1} - 1) * prod_{i>=2} q^{mu_i^2 - mu_i} qbinom(mu_{i-1}, mu_i)
  RatFn out = RatFn(QPoly::monomial(Int(1), static_cast<std::size_t>(n)) - QPoly(Int(1))) /
              RatFn(QPoly::monomial(Int(1), static_cast<std::size_t>(profile[0])) - QPoly(Int(1)));
  for (std::size_t i = 1; i < profile.size(); ++i) {
    long mu = profile[i], prev = profile[i - 1];
    out *= RatFn(QPoly::monomial(Int(1), static_cast<std::size_t>(mu * mu - mu)) *
                 qbinom(prev, mu));
  }
  return out.to_qpoly();
}

QPoly profile_count_nilpotent(const std::vector<long>& profile) {
  validate_profile(profile);
  QPoly out(Int(1));
  for (std::size_t i = 1; i < profile.size(); ++i) {
    long mu = profile[i], prev = profile[i - 1];
    out *= QPoly::monomial(Int(1), static_cast<std::size_t>(mu * mu)) * qbinom(prev, mu);
  }
  return out;
}

QPoly splitting_subspace_count(long m, long d) {
  if (m < 1 || d < 1) throw std::invalid_argument("need m, d >= 1");
  RatFn out = RatFn(QPoly::monomial(Int(1), static_cast<std::size_t>(m * d)) - QPoly(Int(1))) /
              RatFn(QPoly::monomial(Int(1), static_cast<std::size_t>(m)) - QPoly(Int(1)));
  out *= RatFn::q_power(m * (m - 1) * (d - 1));
  return out.to_qpoly();
}

MatGF regular_nilpotent(const FieldPtr& field, std::size_t n) {
  MatGF m(field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = field->one();
  return m;
}

MatGF companion_matrix(const FieldPtr& field, const FqPoly& monic) {
  long d = fqp_deg(monic);
  if (d < 1) throw std::invalid_argument("companion matrix needs degree >= 1");
  if (monic[static_cast<std::size_t>(d)] != field->one())
    throw std::invalid_argument("companion matrix needs a monic polynomial");
  std::size_t n = static_cast<std::size_t>(d);
  MatGF m(field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = field->one();
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = field->neg(monic[i]);
  return m;
}

MatGF companion_of_first_irreducible(const FieldPtr& field, long degree) {
  return companion_matrix(field, find_irreducible(*field, degree, false));
}

MatGF diag_distinct(const FieldPtr& field, std::size_t n) {
  if (static_cast<long>(n) > field->order())
    throw std::invalid_argument("distinct diagonal needs q >= n");
  MatGF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->element(static_cast<long>(i));
  return m;
}

MatGF witness_operator(const FieldPtr& field, long n, long l, long i) {
  if (l < 1 || 2 * l > n) throw std::invalid_argument("need 1 <= l <= n/2");
  if (i < 0 || i > l) throw std::invalid_argument("witness index out of range 0..l");
  if (i == 0) return companion_of_first_irreducible(field, n);
  if (i == l) return MatGF(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  long d = l - i;
  FqPoly f = find_irreducible(*field, d, true);
  MatGF comp = companion_matrix(field, f);
  MatGF m(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::size_t off = static_cast<std::size_t>(n - d);
  for (std::size_t r = 0; r < comp.rows(); ++r)
    for (std::size_t c = 0; c < comp.cols(); ++c) m.at(off + r, off + c) = comp.at(r, c);
  return m;
}

}  // namespace antinv
