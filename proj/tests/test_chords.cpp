#include <doctest.h>

#include <algorithm>
#include <set>

#include "antinv/chords.hpp"
#include "antinv/qseries.hpp"

using namespace antinv;

namespace {
const QPoly q = QPoly::variable();

QPoly qpow_binom2(long t) {  // q^{C(t,2)}
  return QPoly::monomial(Int(1), t * (t - 1) / 2);
}
}  // namespace

TEST_SUITE("chords") {

TEST_CASE("involution validation") {
  CHECK_NOTHROW(Involution({1, 0, kUnpaired}));
  CHECK_THROWS_AS(Involution({1, 2, 0}), std::invalid_argument);   // 3-cycle
  CHECK_THROWS_AS(Involution({0}), std::invalid_argument);         // self-paired
  CHECK_THROWS_AS(Involution({5, 0}), std::invalid_argument);      // out of range
  Involution inv({1, 0, kUnpaired, kUnpaired});
  CHECK(inv.fixed_points() == 2);
  CHECK(inv.is_fixed(2));
  CHECK(!inv.is_fixed(0));
}

TEST_CASE("crossings of a worked diagram") {
  // Points 1..8 with pairs (1,4), (2,6), (7,8); 3 and 5 fixed.  The two
  // infinity-arcs from 3 and 5 each cross (2,6), and (1,4)x(2,6) plus
  // (1,4)x(infinity from 3) account for the rest: 4 crossings total.
  std::vector<std::size_t> partner{3, 5, kUnpaired, 0, kUnpaired, 1, 7, 6};
  CHECK(crossings(partner) == 4);
  CHECK(crossings(Involution(partner)) == 4);
  // Nested arcs never cross; adjacent disjoint arcs never cross.
  CHECK(crossings({3, 2, 1, 0}) == 0);
  CHECK(crossings({1, 0, 3, 2}) == 0);
  CHECK(crossings({2, 3, 0, 1}) == 1);  // the two arcs interleave once
  CHECK(crossings(std::vector<std::size_t>{}) == 0);
  CHECK(crossings({kUnpaired, kUnpaired}) == 0);  // infinity arcs share a point
}

TEST_CASE("enumeration order and counts") {
  auto perfect = enumerate_involutions(4, 0);
  REQUIRE(perfect.size() == 3);
  // Lexicographic in the partner array: (0,1)(2,3) < (0,2)(1,3) < (0,3)(1,2).
  CHECK(perfect[0].partners() == std::vector<std::size_t>{1, 0, 3, 2});
  CHECK(perfect[1].partners() == std::vector<std::size_t>{2, 3, 0, 1});
  CHECK(perfect[2].partners() == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(enumerate_involutions(5, 0).empty());  // parity
  CHECK(enumerate_involutions(3, 5).empty());
  CHECK(enumerate_involutions(0, 0).size() == 1);

  // Matching counts: n points, k fixed -> C(n,k) (n-k-1)!! and total I(n).
  for (std::size_t n = 1; n <= 7; ++n) {
    Int total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      auto list = enumerate_involutions(n, k);
      std::set<std::vector<std::size_t>> dedup;
      for (const auto& inv : list) dedup.insert(inv.partners());
      CHECK(dedup.size() == list.size());
      total += Int(list.size());
    }
    CHECK(total == telephone_number(static_cast<long>(n)));
  }

  // Visitor agrees with the materialized list.
  std::vector<std::vector<std::size_t>> seen;
  for_each_involution(6, 2, [&](const std::vector<std::size_t>& p) { seen.push_back(p); });
  auto listed = enumerate_involutions(6, 2);
  REQUIRE(seen.size() == listed.size());
  for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == listed[i].partners());
}

TEST_CASE("crossing polynomial frozen values") {
  CHECK(touchard(0) == QPoly(Int(1)));
  CHECK(touchard(1) == QPoly(Int(1)));
  CHECK(touchard(2) == QPoly(Int(2)) + q);
  CHECK(touchard(3) == QPoly::from_coeffs({Int(5), Int(6), Int(3), Int(1)}));
  CHECK(touchard(4) == QPoly::from_coeffs(
                           {Int(14), Int(28), Int(28), Int(20), Int(10), Int(4), Int(1)}));
  CHECK(crossing_polynomial(5, 1) ==
        QPoly::from_coeffs({Int(5), Int(6), Int(3), Int(1)}));
  CHECK(crossing_polynomial(6, 2) ==
        QPoly::from_coeffs({Int(9), Int(13), Int(12), Int(7), Int(3), Int(1)}));
  CHECK(crossing_polynomial(3, 3) == QPoly(Int(1)));
  CHECK(crossing_polynomial(3, 1).eval(Int(1)) == Int(3));
  CHECK(crossing_polynomial(4, 1).is_zero());  // parity mismatch
}

TEST_CASE("enumeration matches recurrence") {
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(crossing_polynomial(n, k, AnkMethod::kEnumeration) ==
            crossing_polynomial(n, k, AnkMethod::kRecurrence));
  for (long m = 0; m <= 4; ++m)
    CHECK(touchard(m, AnkMethod::kEnumeration) == touchard(m, AnkMethod::kRecurrence));
}

TEST_CASE("q=1 specializations") {
  for (long n = 0; n <= 10; ++n) {
    Int total = 0;
    for (long k = 0; k <= n; ++k) total += crossing_polynomial(n, k).eval(Int(1));
    CHECK(total == telephone_number(n));
  }
}

TEST_CASE("touchard_riordan_sum") {
  CHECK(touchard_riordan_sum(2) == QPoly::from_coeffs({Int(2), Int(-3), Int(0), Int(1)}));
  for (long m = 0; m <= 6; ++m) {
    QPoly lhs = touchard_riordan_sum(m);
    QPoly rhs = (q - QPoly(Int(1))).pow(m) * touchard(m);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("touchard_formula_sum") {
  for (long n = 0; n <= 7; ++n)
    for (long l = 0; 2 * l <= n; ++l)
      CHECK(touchard_formula_sum(n, l) ==
            (q - QPoly(Int(1))).pow(l) * crossing_polynomial(n, n - 2 * l));
  // At l = m, n = 2m this is the Touchard-Riordan sum.
  for (long m = 0; m <= 6; ++m) CHECK(touchard_formula_sum(2 * m, m) == touchard_riordan_sum(m));
  CHECK_THROWS_AS(touchard_formula_sum(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(touchard_formula_sum(3, -1), std::invalid_argument);
}

TEST_CASE("catalan matrix") {
  // b = 0, lambda = 1: Dyck-path counts; c_{2m,0} are the Catalan numbers.
  auto zero = [](long) { return QPoly(); };
  auto one = [](long) { return QPoly(Int(1)); };
  auto cm = catalan_matrix(zero, one, 10);
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (int m = 0; m <= 5; ++m) CHECK(cm.entries[2 * m][0] == QPoly(Int(catalan[m])));
  CHECK(cm.entries[3][0].is_zero());

  // b = 0, lambda_k = [k]_q recovers the crossing polynomials a_{n,k}.
  auto qweights = [](long k) { return qint(k); };
  auto aq = catalan_matrix(zero, qweights, 7);
  for (long n = 0; n <= 7; ++n)
    for (long k = 0; k <= n; ++k) CHECK(aq.entries[n][k] == crossing_polynomial(n, k));

  CHECK(cm.entries.size() == 11);
  for (const auto& row : cm.entries) CHECK(row.size() == 11);
}

TEST_CASE("telephone numbers") {
  const long frozen[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (long n = 0; n <= 10; ++n) CHECK(telephone_number(n) == Int(frozen[n]));
  CHECK_THROWS_AS(telephone_number(-1), std::invalid_argument);
}

}  // TEST_SUITE
