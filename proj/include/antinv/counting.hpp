#pragma once

// Subspace counts attached to a linear operator T on GF(q)^n:
//   - invariant_count:      X_j = #{W : dim W = j, T W <= W}
//   - anti_invariant_count: #{W : dim W = l, dim(W + T W) = 2l}
//   - profile_count:        #{W : the chain S_1 = W, S_{i+1} = W + T S_i has
//                              dim S_i = mu_1 + ... + mu_i for all i}
//   - pair_class_count:     #{W : dim W = a, dim(W cap T^{-1} W) = b}
// plus the closed-form evaluations and the canonical operator constructions
// used to cross-check them.

#include <random>
#include <vector>

#include "antinv/gflinalg.hpp"
#include "antinv/poly.hpp"

namespace antinv {

Int invariant_count(const MatGF& t, long j, const Int& guard = Int(kDefaultGuard));
// X_0 .. X_n in one sweep.
std::vector<Int> invariant_counts(const MatGF& t, const Int& guard = Int(kDefaultGuard));

Int anti_invariant_count(const MatGF& t, long l, const Int& guard = Int(kDefaultGuard));

// profile must be positive, weakly decreasing, and sum to n.
Int profile_count(const MatGF& t, const std::vector<long>& profile,
                  const Int& guard = Int(kDefaultGuard));

Int pair_class_count(const MatGF& t, long a, long b, const Int& guard = Int(kDefaultGuard));

// The alternating-sum reduction of the anti-invariant count to the invariant
// counts: q^C(l,2) * sum_j (-1)^j (X_j - X_{j-1}) qbinom(n-l-j, n-2l)(q)
// q^C(l-j+1,2).  xj needs entries 0..l at least.
Int anti_invariant_from_counts(long n, long l, const std::vector<Int>& xj, const Int& q);

// Same reduction with X_j measured by brute force on t.
Int anti_invariant_via_formula(const MatGF& t, long l, const Int& guard = Int(kDefaultGuard));

// Closed forms for special operators (polynomials in q):
// regular nilpotent: q^{l^2} qbinom(n-l, n-2l)
QPoly anti_invariant_nilpotent(long n, long l);
// companion of an irreducible of degree n:
// q^C(l,2) (qbinom(n-l, n-2l) q^C(l+1,2) + qbinom(n-l-1, n-2l) q^C(l,2))
QPoly anti_invariant_irreducible(long n, long l);
// diagonal with distinct eigenvalues: q^C(l,2) * touchard_formula_sum(n, l)
QPoly anti_invariant_diag_distinct(long n, long l);

// Profile-constrained counts for special operators.
QPoly profile_count_irreducible(const std::vector<long>& profile);
QPoly profile_count_nilpotent(const std::vector<long>& profile);
// Splitting-subspace count: q^{m(m-1)(d-1)} (q^{md} - 1)/(q^m - 1).
QPoly splitting_subspace_count(long m, long d);

// Operator constructions.
MatGF regular_nilpotent(const FieldPtr& field, std::size_t n);
// Companion matrix of a monic polynomial (1s on the subdiagonal, negated
// coefficients in the last column).
MatGF companion_matrix(const FieldPtr& field, const FqPoly& monic);
MatGF companion_of_first_irreducible(const FieldPtr& field, long degree);
// diag of the first n elements in canonical order; needs q >= n.
MatGF diag_distinct(const FieldPtr& field, std::size_t n);
// Witness family: i = 0 is the companion of an irreducible of degree n;
// 1 <= i < l is 0_{n-l+i} (+) companion(irreducible of degree l-i with
// nonzero constant term); i = l is the zero operator.
MatGF witness_operator(const FieldPtr& field, long n, long l, long i);

}  // namespace antinv
