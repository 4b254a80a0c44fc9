#pragma once

// q-integers, Gaussian binomial coefficients, q-Pochhammer symbols, and
// terminating 2-phi-1 basic hypergeometric series, all in exact arithmetic.

#include <vector>

#include "antinv/ratfn.hpp"

namespace antinv {

// [k]_q = 1 + q + ... + q^{k-1}; requires k >= 0.
QPoly qint(long k);

// Gaussian binomial, zero for k < 0, k > n, or n < 0.  Memoized via the
// q-Pascal recurrence, so repeated queries are cheap.
QPoly qbinom(long n, long k);

// Finite q-Pochhammer (q^s; q)_n = prod_{t=0}^{n-1} (1 - q^{s+t}), s >= 1,
// n >= 0.
QPoly qpoch(long s, long n);

// (q^e; q)_n for any integer e; a rational function because 1 - q^d with
// d < 0 is (q^{-d} - 1) / q^{-d}.  Vanishes iff some e + t = 0, t < n.
RatFn poch_ratfn(long e, long n);

// A quotient prod_i (q^{a_i}; q)_inf / prod_j (q^{b_j}; q)_inf with all
// exponents >= 1 and equally many factors on each side.  Every such quotient
// collapses to a finite product of Pochhammers; the result is independent of
// how numerator and denominator factors are paired.
struct PochQuotient {
  std::vector<long> num_exps;
  std::vector<long> den_exps;
};
RatFn poch_inf_quotient(const PochQuotient& pq);

// Terminating series sum_{j=0}^{N} (q^{-N}; q)_j (q^b; q)_j /
// ((q; q)_j (q^c; q)_j) * q^{zj}.  Throws std::domain_error when a
// denominator factor vanishes for some j <= N (c <= 0 and c + N - 1 >= 0).
RatFn phi21_terminating(long upper_n, long b_exp, long c_exp, long z_exp);

}  // namespace antinv
