#pragma once

// Involutions of {1..n} drawn as chord diagrams, their crossing statistic,
// the crossing-generating polynomials, Touchard/Touchard-Riordan sums, and
// the weighted Catalan (Stieltjes) matrix.

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "antinv/poly.hpp"

namespace antinv {

// partner[i] is the 0-based partner of point i, or kUnpaired for a fixed
// point.  An involution must satisfy partner[partner[i]] == i.
inline constexpr std::size_t kUnpaired = std::numeric_limits<std::size_t>::max();

class Involution {
 public:
  explicit Involution(std::vector<std::size_t> partner);
  std::size_t size() const { return partner_.size(); }
  bool is_fixed(std::size_t i) const { return partner_.at(i) == kUnpaired; }
  std::size_t partner(std::size_t i) const { return partner_.at(i); }
  std::size_t fixed_points() const;
  const std::vector<std::size_t>& partners() const { return partner_; }
  friend bool operator==(const Involution& a, const Involution& b) = default;

 private:
  std::vector<std::size_t> partner_;
};

// Number of crossing pairs of arcs when points sit on a line and each fixed
// point is joined to a shared point at infinity placed right of everything
// (two infinity-arcs never cross each other).
long crossings(const Involution& inv);
long crossings(const std::vector<std::size_t>& partner);

// All involutions of n points with exactly k fixed points, in lexicographic
// order of the partner array (kUnpaired sorts last).  Empty when n - k is odd
// or k > n.
std::vector<Involution> enumerate_involutions(std::size_t n, std::size_t k);

// Visitor variant that avoids materializing the list; the span passed to the
// callback is reused between calls.
void for_each_involution(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& fn);

enum class AnkMethod { kEnumeration, kRecurrence };

// Crossing-generating polynomial: sum of q^{crossings} over involutions of n
// points with k fixed points.
QPoly crossing_polynomial(long n, long k, AnkMethod method = AnkMethod::kRecurrence);

// q-Touchard polynomial T_m: crossing polynomial of perfect matchings on 2m
// points.
QPoly touchard(long m, AnkMethod method = AnkMethod::kRecurrence);

// sum_{j=0}^{m} (-1)^j (C(2m, j) - C(2m, j-1)) q^{C(m-j+1, 2)}, which equals
// (q-1)^m T_m.
QPoly touchard_riordan_sum(long m);

// sum_j (-1)^j (C(n,j) - C(n,j-1)) qbinom(n-l-j, n-2l) q^{C(l-j+1,2)}, which
// equals (q-1)^l times the crossing polynomial with k = n - 2l fixed points.
QPoly touchard_formula_sum(long n, long l);

// Stieltjes/Catalan matrix for the three-term recurrence with diagonal
// weights b_k and subdiagonal weights lambda_k:
//   c_{n,k} = c_{n-1,k-1} + b_k c_{n-1,k} + lambda_{k+1} c_{n-1,k+1},
// c_{0,0} = 1.  Entries are polynomials in q.
struct CatalanMatrix {
  std::vector<std::vector<QPoly>> entries;  // entries[n][k], 0 <= n,k <= rows
};
CatalanMatrix catalan_matrix(const std::function<QPoly(long)>& b,
                             const std::function<QPoly(long)>& lambda, long rows);

// Involutions of n points counted regardless of fixed points (telephone
// numbers): I(n) = I(n-1) + (n-1) I(n-2).
Int telephone_number(long n);

}  // namespace antinv
