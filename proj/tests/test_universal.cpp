#include <doctest.h>

#include "antinv/counting.hpp"
#include "antinv/universal.hpp"

using namespace antinv;

namespace {

const QPoly q = QPoly::variable();

std::vector<QPoly> coeffs(std::vector<std::vector<long>> rows) {
  std::vector<QPoly> out;
  for (auto& r : rows) {
    std::vector<Int> c(r.begin(), r.end());
    out.push_back(QPoly::from_coeffs(std::move(c)));
  }
  return out;
}

}  // namespace

TEST_SUITE("universal") {

TEST_CASE("frozen coefficient vectors") {
  auto u21 = universal_by_recurrence(2, 1);
  REQUIRE(u21.p.size() == 2);
  CHECK(u21.p[0] == q + QPoly(Int(1)));
  CHECK(u21.p[1] == QPoly(Int(-1)));

  auto u41 = universal_by_recurrence(4, 1);
  CHECK(u41.p == coeffs({{1, 1, 1, 1}, {-1}}));  // [4]_q, -1

  auto u42 = universal_by_recurrence(4, 2);
  CHECK(u42.p == coeffs({{0, 0, 1, 0, 1},      // q^4 + q^2
                         {0, -1, -1},          // -q^2 - q
                         {0, 1}}));            // q

  auto u63 = universal_by_recurrence(6, 3);
  CHECK(u63.p == coeffs({{0, 0, 0, 0, 0, 0, 1, 0, 0, 1},   // q^9 + q^6
                         {0, 0, 0, 0, -1, 0, -1},          // -q^6 - q^4
                         {0, 0, 0, 1, 1},                  // q^4 + q^3
                         {0, 0, 0, -1}}));                 // -q^3
}

TEST_CASE("trivial l") {
  // l = 0: alpha counts the zero subspace only, so p = (1).
  for (long n = 0; n <= 5; ++n) {
    for (auto method :
         {universal_by_recurrence, universal_by_system, universal_closed_form}) {
      auto u = method(n, 0);
      REQUIRE(u.p.size() == 1);
      CHECK(u.p[0] == QPoly(Int(1)));
    }
  }
}

TEST_CASE("three routes agree") {
  for (long n = 1; n <= 8; ++n)
    for (long l = 0; 2 * l <= n; ++l) {
      auto rec = universal_by_recurrence(n, l);
      auto cls = universal_closed_form(n, l);
      REQUIRE(rec.p.size() == cls.p.size());
      for (long j = 0; j <= l; ++j) CHECK(rec.p[j] == cls.p[j]);
    }
  for (long n = 1; n <= 6; ++n)
    for (long l = 0; 2 * l <= n; ++l) {
      auto sys = universal_by_system(n, l);
      auto cls = universal_closed_form(n, l);
      for (long j = 0; j <= l; ++j) CHECK(sys.p[j] == cls.p[j]);
    }
}

TEST_CASE("recurrence matches numeric pair classes") {
  auto f2 = FieldCtx::make(2, 1);
  std::mt19937_64 rng(360);
  PairClassRecurrence rec(3);
  for (int trial = 0; trial < 12; ++trial) {
    MatGF t = random_matrix(f2, 3, rng);
    auto xj = invariant_counts(t);
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= a; ++b) {
        const auto& coef = rec.get(a, b);
        Int predicted = 0;
        for (long j = 0; j <= 3; ++j) predicted += coef[j].eval(Int(2)) * xj[j];
        CHECK(predicted == pair_class_count(t, a, b));
      }
  }
  CHECK_THROWS_AS(rec.get(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(rec.get(4, 0), std::invalid_argument);
}

TEST_CASE("exhaustive check on all operators of GF(2)^3") {
  // The defining property, verified on every single operator: for each T,
  // alpha_l(T) = sum_j p_j(2) X^T_j.
  auto f2 = FieldCtx::make(2, 1);
  std::vector<UniversalFormula> formulas;
  for (long l = 0; 2 * l <= 3; ++l) formulas.push_back(universal_closed_form(3, l));
  MatGF t(f2, 3, 3);
  for (long mask = 0; mask < 512; ++mask) {
    for (long bit = 0; bit < 9; ++bit)
      t.at(bit / 3, bit % 3) = (mask >> bit) & 1 ? f2->one() : f2->zero();
    auto xj = invariant_counts(t);
    for (const auto& u : formulas) {
      Int predicted = 0;
      for (long j = 0; j <= u.l; ++j) predicted += u.p[j].eval(Int(2)) * xj[j];
      CHECK(predicted == anti_invariant_count(t, u.l));
    }
  }
}

TEST_CASE("witness matrix shape and frozen entries") {
  auto m = witness_matrix(4, 2);
  REQUIRE(m.size() == 3);
  // Row 0: delta.
  CHECK(m[0][0] == QPoly(Int(1)));
  CHECK(m[0][1].is_zero());
  CHECK(m[0][2].is_zero());
  // Row 1 (i=1): qbinom(3, j) + qbinom(3, j-1).
  CHECK(m[1][0] == QPoly(Int(1)));
  CHECK(m[1][1] == qbinom(3, 1) + QPoly(Int(1)));  // [3]_q + 1
  CHECK(m[1][2] == qbinom(3, 2) + qbinom(3, 1));
  // Row 2 (i=l): qbinom(4, j).
  for (long j = 0; j <= 2; ++j) CHECK(m[2][j] == qbinom(4, j));
}

TEST_CASE("witness entry degrees") {
  for (long n = 2; n <= 8; ++n)
    for (long l = 1; 2 * l <= n; ++l) {
      auto m = witness_matrix(n, l);
      for (long i = 1; i <= l; ++i)
        for (long j = 0; j <= l; ++j) {
          CHECK(m[i][j].degree() == witness_entry_degree(n, l, i, j));
          CHECK(witness_entry_degree(n, l, i, j) == j * (n - l + i - j));
        }
    }
  CHECK_THROWS_AS(witness_entry_degree(4, 2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(witness_entry_degree(4, 2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(witness_entry_degree(4, 2, 1, 3), std::invalid_argument);
}

TEST_CASE("zero sums vanish") {
  for (long n = 2; n <= 10; ++n)
    for (long l = 1; 2 * l <= n; ++l)
      for (long i = 1; i <= l; ++i) CHECK(zero_sum_value(n, l, i).is_zero());
  CHECK_THROWS_AS(zero_sum_value(4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(zero_sum_value(4, 2, 3), std::invalid_argument);
}

TEST_CASE("zero sum decomposition") {
  for (long n = 2; n <= 8; ++n)
    for (long l = 1; 2 * l <= n; ++l)
      for (long i = 1; i <= l; ++i) {
        RatFn s[5];
        for (int which = 1; which <= 4; ++which) {
          s[which] = zero_sum_component(n, l, i, which, SumMethod::kBinomial);
          CHECK(s[which] ==
                zero_sum_component(n, l, i, which, SumMethod::kHypergeometric));
        }
        // The two pairings that make the total collapse.
        CHECK(s[1] == s[4]);
        CHECK(s[2] == s[3]);
        CHECK((s[1] + s[2] - s[3] - s[4]).is_zero());
        CHECK(s[1] + s[2] - s[3] - s[4] == RatFn(zero_sum_value(n, l, i)));
      }
}

TEST_CASE("heine transformed components") {
  for (long n = 2; n <= 8; ++n)
    for (long l = 1; 2 * l <= n; ++l)
      for (long i = 1; i <= l; ++i) {
        RatFn s1 = zero_sum_component(n, l, i, 1, SumMethod::kBinomial);
        RatFn s2 = zero_sum_component(n, l, i, 2, SumMethod::kBinomial);
        CHECK(zero_sum_component_heine(n, l, i, 1) == s1);
        CHECK(zero_sum_component_heine(n, l, i, 2) == s2);
      }
  CHECK_THROWS_AS(zero_sum_component(4, 2, 1, 5, SumMethod::kBinomial),
                  std::invalid_argument);
  CHECK_THROWS_AS(zero_sum_component_heine(4, 2, 1, 3), std::invalid_argument);
}

TEST_CASE("determinant degree") {
  auto r21 = det_degree_check(2, 1);
  CHECK(r21.det == q + QPoly(Int(1)));
  CHECK(r21.expected_degree == 1);
  CHECK(r21.pass);

  auto r42 = det_degree_check(4, 2);
  CHECK(r42.det == QPoly::from_coeffs({Int(0), Int(-1), Int(0), Int(-1), Int(1), Int(0), Int(1)}));
  CHECK(r42.expected_degree == 6);
  CHECK(r42.pass);

  for (long n = 2; n <= 8; ++n)
    for (long l = 1; 2 * l <= n; ++l) {
      auto r = det_degree_check(n, l);
      CHECK(r.pass);
      CHECK(r.det.degree() == (n - l) * l * (l + 1) / 2);
    }
}

}  // TEST_SUITE
