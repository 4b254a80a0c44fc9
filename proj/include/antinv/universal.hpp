#pragma once

// Universal formulas: coefficient vectors (p_0, ..., p_l) of polynomials in q
// such that for every operator T on F^n the anti-invariant count of dimension
// l equals sum_j p_j X^T_j, where X^T_j counts j-dimensional T-invariant
// subspaces.  Three independent routes produce the same vector: a symbolic
// expansion of the intersection-dimension recurrence, a linear system over
// the witness operator family, and the closed form.  The module also carries
// the alternating-sum identities (and their basic hypergeometric forms) that
// prove the closed form solves the system.

#include <map>
#include <set>
#include <vector>

#include "antinv/poly.hpp"
#include "antinv/qseries.hpp"
#include "antinv/ratfn.hpp"

namespace antinv {

struct UniversalFormula {
  long n = 0;
  long l = 0;
  std::vector<QPoly> p;  // size l + 1
};

// Symbolic expansion of |(a, b)| = #{W : dim W = a, dim(W cap T^{-1}W) = b}
// as a linear combination of X_0..X_n, via
//   |(a,b)| = X_b qbinom(n-b, a-b) - X_a qbinom(a, b)
//           + sum_{j<b} |(b,j)| qbinom(n-2b+j, a-2b+j)
//           - sum_{b<k<a} |(a,k)| qbinom(k, b),       |(a,a)| = X_a.
// Terminates because (a, a-b) decreases lexicographically.
class PairClassRecurrence {
 public:
  explicit PairClassRecurrence(long n);
  // Coefficients on X_0..X_n; requires 0 <= b <= a <= n.
  const std::vector<QPoly>& get(long a, long b);

 private:
  std::vector<QPoly> compute(long a, long b);
  long n_;
  std::map<std::pair<long, long>, std::vector<QPoly>> memo_;
  std::set<std::pair<long, long>> in_progress_;
};

UniversalFormula universal_by_recurrence(long n, long l);
UniversalFormula universal_by_system(long n, long l);
UniversalFormula universal_closed_form(long n, long l);

// Invariant-subspace counts X^{T_i}_j of the witness family, rows i = 0..l,
// columns j = 0..l:
//   row 0:       1 at j = 0 (full irreducible companion),
//   rows 0<i<l:  qbinom(n-l+i, j) + qbinom(n-l+i, j-l+i),
//   row l:       qbinom(n, j) (zero operator).
std::vector<std::vector<QPoly>> witness_matrix(long n, long l);

// Expected degree j(n-l+i-j) of the witness matrix entry, rows 1 <= i <= l.
long witness_entry_degree(long n, long l, long i, long j);

// The alternating sum that certifies row i of the witness system vanishes
// under the closed-form coefficients; identically zero for 1 <= i <= l.
QPoly zero_sum_value(long n, long l, long i);

enum class SumMethod { kBinomial, kHypergeometric };

// The four alternating binomial sums S_1..S_4 whose pairwise equality
// (S1 = S4, S2 = S3) is equivalent to the vanishing of zero_sum_value:
// zero_sum_value = S1 + S2 - S3 - S4.  Each has a terminating 2-phi-1 form.
RatFn zero_sum_component(long n, long l, long i, int which, SumMethod method);

// The Heine-transformed evaluation: pair 1 re-expresses S1 through S4's
// series, pair 2 re-expresses S2 through S3's series, using the
// infinite-Pochhammer quotient that the transformation prescribes.
RatFn zero_sum_component_heine(long n, long l, long i, int pair);

struct DetDegreeReport {
  QPoly det;
  long expected_degree = 0;
  bool pass = false;
};

// Determinant of the witness matrix minor on rows/columns 1..l; the formula
// system is uniquely solvable iff it is nonzero, and its degree must be
// (n-l) l (l+1) / 2.
DetDegreeReport det_degree_check(long n, long l);

}  // namespace antinv
