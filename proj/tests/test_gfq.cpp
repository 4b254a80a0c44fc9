#include <doctest.h>

#include "antinv/gfq.hpp"

using namespace antinv;

TEST_SUITE("gfq") {

TEST_CASE("construction and canonical moduli") {
  auto f2 = FieldCtx::make(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->modulus() == std::vector<long>{0, 1});  // just t

  CHECK(FieldCtx::make(2, 2)->modulus() == std::vector<long>{1, 1, 1});
  CHECK(FieldCtx::make(2, 3)->modulus() == std::vector<long>{1, 1, 0, 1});
  CHECK(FieldCtx::make(2, 4)->modulus() == std::vector<long>{1, 1, 0, 0, 1});
  CHECK(FieldCtx::make(3, 2)->order() == 9);
  CHECK(FieldCtx::make(2, 10)->order() == 1024);

  CHECK_THROWS_AS(FieldCtx::make(4, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(FieldCtx::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(2, 11), std::invalid_argument);  // order > 1024
  CHECK_THROWS_AS(FieldCtx::make(3, 7), std::invalid_argument);
}

TEST_CASE("supplied modulus validation") {
  // t^2 + 1 is irreducible over GF(3) but splits over GF(2) and GF(5).
  CHECK_NOTHROW(FieldCtx::make(3, 2, std::vector<long>{1, 0, 1}));
  CHECK_THROWS_AS(FieldCtx::make(2, 2, std::vector<long>{1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(5, 2, std::vector<long>{1, 0, 1}), std::invalid_argument);
  // Wrong length, non-monic, coefficient out of range.
  CHECK_THROWS_AS(FieldCtx::make(2, 2, std::vector<long>{1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(3, 2, std::vector<long>{1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(3, 2, std::vector<long>{3, 0, 1}), std::invalid_argument);

  // Both GF(4) presentations agree as fields even with distinct contexts.
  auto a = FieldCtx::make(2, 2);
  auto b = FieldCtx::make(2, 2, std::vector<long>{1, 1, 1});
  CHECK(same_field(*a, *b));
  CHECK(!same_field(*a, *FieldCtx::make(2, 3)));
}

TEST_CASE("element indexing and digits") {
  auto f9 = FieldCtx::make(3, 2);
  CHECK(f9->coeffs(f9->element(0)) == std::vector<long>{0, 0});
  CHECK(f9->coeffs(f9->element(5)) == std::vector<long>{2, 1});  // 2 + t
  CHECK(f9->from_coeffs({2, 1}) == f9->element(5));
  CHECK(f9->from_coeffs({5, 4}) == f9->element(2 + 3 * 1));  // reduced mod 3
  CHECK(f9->from_int(4) == f9->element(1));                  // 4 mod 3
  CHECK(f9->from_int(-1) == f9->neg(f9->one()));
  CHECK_THROWS_AS(f9->element(9), std::invalid_argument);
  CHECK_THROWS_AS(f9->element(-1), std::invalid_argument);

  auto f5 = FieldCtx::make(5, 1);
  for (long v = 0; v < 5; ++v) CHECK(f5->coeffs(f5->element(v)) == std::vector<long>{v});
}

TEST_CASE("field axioms on GF(9)") {
  auto f = FieldCtx::make(3, 2);
  const long n = f->order();
  for (long i = 0; i < n; ++i) {
    FE a = f->element(i);
    CHECK(f->add(a, f->zero()) == a);
    CHECK(f->mul(a, f->one()) == a);
    CHECK(f->add(a, f->neg(a)) == f->zero());
    if (!f->is_zero(a)) {
      CHECK(f->mul(a, f->inv(a)) == f->one());
      CHECK(f->pow(a, n - 1) == f->one());  // multiplicative order divides q-1
    }
    for (long j = 0; j < n; ++j) {
      FE b = f->element(j);
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      for (long t = 0; t < n; ++t) {
        FE c = f->element(t);
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
  CHECK_THROWS_AS(f->inv(f->zero()), std::domain_error);
}

TEST_CASE("arithmetic spot checks") {
  // GF(4) = GF(2)[t]/(t^2+t+1): t * t = t + 1, t * (t+1) = 1.
  auto f4 = FieldCtx::make(2, 2);
  FE t = f4->element(2), t1 = f4->element(3);
  CHECK(f4->mul(t, t) == t1);
  CHECK(f4->mul(t, t1) == f4->one());
  CHECK(f4->to_string(t) == "t");
  CHECK(f4->to_string(t1) == "1+t");
  CHECK(f4->to_string(f4->zero()) == "0");

  // GF(8): every nonzero element has order dividing 7 (so a^7 = 1).
  auto f8 = FieldCtx::make(2, 3);
  for (long i = 1; i < 8; ++i) CHECK(f8->pow(f8->element(i), 7) == f8->one());
  CHECK(f8->pow(f8->element(2), 0) == f8->one());

  // Characteristic-p Frobenius is additive: (a+b)^p = a^p + b^p.
  auto f25 = FieldCtx::make(5, 2);
  for (long i = 0; i < 25; i += 3)
    for (long j = 0; j < 25; j += 4) {
      FE a = f25->element(i), b = f25->element(j);
      CHECK(f25->pow(f25->add(a, b), 5) == f25->add(f25->pow(a, 5), f25->pow(b, 5)));
    }
}

TEST_CASE("polynomial helpers") {
  auto f = FieldCtx::make(2, 1);
  FqPoly x2x1{f->one(), f->one(), f->one()};  // t^2+t+1 over GF(2)
  CHECK(fqp_deg(x2x1) == 2);
  CHECK(fqp_deg(FqPoly{}) == -1);
  CHECK(fqp_deg(FqPoly{f->zero(), f->zero()}) == -1);
  FqPoly prod = fqp_mul(*f, x2x1, x2x1);  // (t^2+t+1)^2 = t^4+t^2+1 in char 2
  CHECK(fqp_trim(prod) ==
        FqPoly({f->one(), f->zero(), f->one(), f->zero(), f->one()}));
  CHECK(fqp_deg(fqp_mod(*f, prod, x2x1)) == -1);
  FqPoly rem = fqp_mod(*f, FqPoly{f->zero(), f->zero(), f->zero(), f->one()},  // t^3
                       x2x1);
  CHECK(fqp_trim(rem) == FqPoly({f->one()}));  // t^3 = (t+1)(t^2+t+1) + 1

  CHECK(fqp_is_irreducible(*f, x2x1));
  CHECK(!fqp_is_irreducible(*f, prod));
  CHECK(!fqp_is_irreducible(*f, FqPoly{f->one()}));          // unit
  CHECK(fqp_is_irreducible(*f, FqPoly{f->zero(), f->one()}));  // t
}

TEST_CASE("find_irreducible") {
  auto f2 = FieldCtx::make(2, 1);
  CHECK(find_irreducible(*f2, 2, false) == FqPoly({f2->one(), f2->one(), f2->one()}));
  CHECK(find_irreducible(*f2, 1, false) == FqPoly({f2->zero(), f2->one()}));  // t
  CHECK(find_irreducible(*f2, 1, true) == FqPoly({f2->one(), f2->one()}));    // t+1
  auto deg3 = find_irreducible(*f2, 3, true);
  CHECK(fqp_is_irreducible(*f2, deg3));
  CHECK(deg3 == FqPoly({f2->one(), f2->one(), f2->zero(), f2->one()}));

  auto f3 = FieldCtx::make(3, 1);
  auto g = find_irreducible(*f3, 2, true);
  CHECK(fqp_is_irreducible(*f3, g));
  CHECK(!f3->is_zero(g[0]));
  CHECK_THROWS_AS(find_irreducible(*f2, 0, false), std::invalid_argument);
}

}  // TEST_SUITE
