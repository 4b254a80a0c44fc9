#include "antinv/qseries.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace antinv {

QPoly qint(long k) {
  if (k < 0) throw std::invalid_argument("qint: negative argument");
  return QPoly::from_coeffs(std::vector<Int>(static_cast<std::size_t>(k), Int(1)));
}

QPoly qbinom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return QPoly();
  if (k == 0 || k == n) return QPoly(Int(1));
  static std::map<std::pair<long, long>, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  // Iterative q-Pascal fill along rows keeps recursion depth flat.
  for (long m = 2; m <= n; ++m) {
    for (long j = 1; j < m; ++j) {
      auto kj = std::make_pair(m, j);
      if (cache.count(kj)) continue;
      QPoly left = (j == 1) ? QPoly(Int(1)) : cache.at({m - 1, j - 1});
      QPoly right = (j == m - 1) ? QPoly(Int(1)) : cache.at({m - 1, j});
      cache[kj] = left + QPoly::monomial(Int(1), static_cast<std::size_t>(j)) * right;
    }
  }
  return cache.at(key);
}

QPoly qpoch(long s, long n) {
  if (s < 1) throw std::invalid_argument("qpoch: base exponent must be >= 1");
  if (n < 0) throw std::invalid_argument("qpoch: negative length");
  QPoly out(Int(1));
  for (long t = 0; t < n; ++t) {
    QPoly f = QPoly(Int(1)) - QPoly::monomial(Int(1), static_cast<std::size_t>(s + t));
    out *= f;
  }
  return out;
}

RatFn poch_ratfn(long e, long n) {
  if (n < 0) throw std::invalid_argument("poch_ratfn: negative length");
  RatFn out(1);
  for (long t = 0; t < n; ++t) {
    long d = e + t;
    RatFn f;
    if (d >= 0) {
      f = RatFn(1) - RatFn::q_power(d);  // zero factor when d == 0
    } else {
      // 1 - q^d = (q^{-d} - 1) / q^{-d}
      f = (RatFn::q_power(-d) - RatFn(1)) / RatFn::q_power(-d);
    }
    out *= f;
  }
  return out;
}

RatFn poch_inf_quotient(const PochQuotient& pq) {
  if (pq.num_exps.size() != pq.den_exps.size())
    throw std::invalid_argument("poch_inf_quotient: factor counts differ");
  for (long e : pq.num_exps)
    if (e < 1) throw std::invalid_argument("poch_inf_quotient: exponent < 1");
  for (long e : pq.den_exps)
    if (e < 1) throw std::invalid_argument("poch_inf_quotient: exponent < 1");
  // Pair sorted exponents; (q^a;q)_inf / (q^b;q)_inf is (q^a;q)_{b-a} when
  // b >= a and 1/(q^b;q)_{a-b} otherwise, so each pair is a finite product.
  std::vector<long> num = pq.num_exps, den = pq.den_exps;
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  RatFn out(1);
  for (std::size_t i = 0; i < num.size(); ++i) {
    long a = num[i], b = den[i];
    if (b >= a)
      out *= RatFn(qpoch(a, b - a));
    else
      out /= RatFn(qpoch(b, a - b));
  }
  return out;
}

RatFn phi21_terminating(long upper_n, long b_exp, long c_exp, long z_exp) {
  if (upper_n < 0) throw std::invalid_argument("phi21: negative termination index");
  if (c_exp <= 0 && c_exp + upper_n - 1 >= 0)
    throw std::domain_error("phi21: lower parameter makes a denominator factor vanish");
  RatFn sum(1);  // j = 0 term
  RatFn term(1);
  for (long j = 1; j <= upper_n; ++j) {
    // Ratio of consecutive terms of the series.
    RatFn ratio = poch_ratfn(-upper_n + j - 1, 1) * poch_ratfn(b_exp + j - 1, 1) /
                  (poch_ratfn(j, 1) * poch_ratfn(c_exp + j - 1, 1)) *
                  RatFn::q_power(z_exp);
    term *= ratio;
    sum += term;
  }
  return sum;
}

}  // namespace antinv
