#include <doctest.h>

#include "antinv/numeric.hpp"
#include "antinv/qseries.hpp"

using namespace antinv;

namespace {
const QPoly q = QPoly::variable();
}

TEST_SUITE("qseries") {

TEST_CASE("qint") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == QPoly(Int(1)));
  CHECK(qint(4) == QPoly::from_coeffs({Int(1), Int(1), Int(1), Int(1)}));
  CHECK_THROWS_AS(qint(-1), std::invalid_argument);
}

TEST_CASE("qbinom base values") {
  CHECK(qbinom(0, 0) == QPoly(Int(1)));
  CHECK(qbinom(5, 0) == QPoly(Int(1)));
  CHECK(qbinom(5, 5) == QPoly(Int(1)));
  CHECK(qbinom(2, 1) == q + QPoly(Int(1)));
  CHECK(qbinom(4, 2) == QPoly::from_coeffs({Int(1), Int(1), Int(2), Int(1), Int(1)}));
  CHECK(qbinom(3, 5).is_zero());
  CHECK(qbinom(3, -1).is_zero());
  CHECK(qbinom(-2, 0).is_zero());
}

TEST_CASE("qbinom recurrences and symmetry") {
  for (int n = 0; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(qbinom(n, k) == qbinom(n, n - k));
      if (n > 0) {
        // Both q-Pascal rules.
        CHECK(qbinom(n, k) ==
              qbinom(n - 1, k - 1) + QPoly::monomial(Int(1), k) * qbinom(n - 1, k));
        CHECK(qbinom(n, k) ==
              QPoly::monomial(Int(1), n - k) * qbinom(n - 1, k - 1) + qbinom(n - 1, k));
      }
      CHECK(qbinom(n, k).eval(Int(1)) == binomial(n, k));
    }
  }
}

TEST_CASE("qbinom product rule") {
  // [n,k][k,j] = [n,j][n-j,k-j]
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j)
        CHECK(qbinom(n, k) * qbinom(k, j) == qbinom(n, j) * qbinom(n - j, k - j));
}

TEST_CASE("qpoch") {
  CHECK(qpoch(1, 0) == QPoly(Int(1)));
  CHECK(qpoch(1, 1) == QPoly(Int(1)) - q);
  CHECK(qpoch(2, 2) == (QPoly(Int(1)) - q * q) * (QPoly(Int(1)) - q * q * q));
  CHECK_THROWS_AS(qpoch(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(qpoch(1, -1), std::invalid_argument);
  // Factorization of the q-binomial: (q;q)_n = (q;q)_k (q;q)_{n-k} [n,k].
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(qpoch(1, n) == qpoch(1, k) * qpoch(1, n - k) * qbinom(n, k));
}

TEST_CASE("poch_ratfn at general integer exponents") {
  for (int e = 1; e <= 5; ++e)
    for (int n = 0; n <= 4; ++n) CHECK(poch_ratfn(e, n) == RatFn(qpoch(e, n)));
  // (q^0;q)_n has the 1-1 = 0 factor for n >= 1.
  CHECK(poch_ratfn(0, 3).is_zero());
  CHECK(poch_ratfn(0, 0) == RatFn(QPoly(Int(1))));
  // Negative exponent: (q^{-1};q)_2 = (1 - q^{-1})(1 - 1) = 0.
  CHECK(poch_ratfn(-1, 2).is_zero());
  // (q^{-2};q)_2 = (1-q^{-2})(1-q^{-1}) stays nonzero.
  RatFn expect = (RatFn(QPoly(Int(1))) - RatFn::q_power(-2)) *
                 (RatFn(QPoly(Int(1))) - RatFn::q_power(-1));
  CHECK(poch_ratfn(-2, 2) == expect);
  CHECK_THROWS_AS(poch_ratfn(1, -1), std::invalid_argument);
}

TEST_CASE("poch_inf_quotient") {
  // (q;q)_inf / (q^3;q)_inf = (q;q)_2.
  CHECK(poch_inf_quotient({{1}, {3}}) == RatFn(qpoch(1, 2)));
  // (q^3;q)_inf / (q;q)_inf = 1/(q;q)_2.
  CHECK(poch_inf_quotient({{3}, {1}}) == RatFn(QPoly(Int(1)), qpoch(1, 2)));
  CHECK(poch_inf_quotient({{2}, {2}}) == RatFn(QPoly(Int(1))));
  // Pairing is sorted, so the result is independent of input order.
  CHECK(poch_inf_quotient({{5, 1}, {2, 3}}) == poch_inf_quotient({{1, 5}, {3, 2}}));
  CHECK(poch_inf_quotient({{1, 4}, {2, 6}}) ==
        poch_inf_quotient({{1}, {2}}) * poch_inf_quotient({{4}, {6}}));
  CHECK_THROWS_AS(poch_inf_quotient({{1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(poch_inf_quotient({{0}, {1}}), std::invalid_argument);
}

TEST_CASE("phi21_terminating") {
  // N=0 sums to the single term 1.
  CHECK(phi21_terminating(0, 1, 2, 1) == RatFn(QPoly(Int(1))));
  // N=1: 1 + (1-q^{-1})(1-q^b)/((1-q)(1-q^c)) z, with b=1,c=2,z=q
  // term = (1-q^{-1})(1-q) q / ((1-q)(1-q^2)) = -(1-q)/(1-q^2) = -1/(1+q).
  // Sum = 1 - 1/(1+q) = q/(1+q).
  CHECK(phi21_terminating(1, 1, 2, 1) == RatFn(q, q + QPoly(Int(1))));
  // b <= 0 with b > -N truncates the series early but stays well-defined.
  CHECK(phi21_terminating(2, 0, 3, 1) == RatFn(QPoly(Int(1))));
  // Ill-posed: c = -1 hits a zero denominator factor within range.
  CHECK_THROWS_AS(phi21_terminating(3, 1, -1, 1), std::domain_error);
  CHECK_THROWS_AS(phi21_terminating(2, 1, 0, 1), std::domain_error);
  CHECK_THROWS_AS(phi21_terminating(-1, 1, 2, 1), std::invalid_argument);
  // c <= -N keeps all denominator factors nonzero.
  CHECK_NOTHROW(phi21_terminating(2, 1, -2, 1));

  // Direct small-case expansion of the defining sum, z = q^2.
  for (int N = 0; N <= 4; ++N) {
    RatFn direct;
    for (int j = 0; j <= N; ++j) {
      RatFn term = poch_ratfn(-N, j) * poch_ratfn(1, j) /
                   (poch_ratfn(1, j) * poch_ratfn(3, j));
      direct += term * RatFn::q_power(2 * j);
    }
    CHECK(phi21_terminating(N, 1, 3, 2) == direct);
  }
}

}  // TEST_SUITE
