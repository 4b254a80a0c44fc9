#include "antinv/poly.hpp"

#include <algorithm>

namespace antinv {
namespace {

// Integer coefficient vectors (ascending, trailing zeros allowed) used only
// inside the subresultant gcd.
using ZVec = std::vector<Int>;

long zdeg(const ZVec& v) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (v[i] != 0) return static_cast<long>(i);
  return -1;
}

void ztrim(ZVec& v) { v.resize(static_cast<std::size_t>(zdeg(v) + 1)); }

Int zcontent(const ZVec& v) {
  Int g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void zdiv_scalar(ZVec& v, const Int& s) {
  for (auto& c : v) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    if (r != 0) throw std::logic_error("inexact scalar division in gcd");
    c = q;
  }
}

// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b.
ZVec zprem(ZVec a, const ZVec& b) {
  long da = zdeg(a), db = zdeg(b);
  const Int& lb = b[static_cast<std::size_t>(db)];
  for (long i = da; i >= db; --i) {
    Int top = a[static_cast<std::size_t>(i)];
    for (long j = 0; j <= i; ++j) a[static_cast<std::size_t>(j)] *= lb;
    if (top != 0)
      for (long j = 0; j <= db; ++j)
        a[static_cast<std::size_t>(i - db + j)] -= top * b[static_cast<std::size_t>(j)];
    a[static_cast<std::size_t>(i)] = 0;
  }
  ztrim(a);
  return a;
}

// Scale a rational polynomial to a primitive integer polynomial (the result
// differs from the input by a positive rational factor).
ZVec primitive_scale(const RatPoly& p) {
  Int l = 1;
  for (const auto& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZVec v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rat scaled = c * Rat(l);
    v.push_back(scaled.get_num());
  }
  Int cont = zcontent(v);
  if (cont > 1) zdiv_scalar(v, cont);
  return v;
}

std::size_t low_valuation(const ZVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return 0;
}

RatPoly monic_from_zvec(const ZVec& v, std::size_t shift) {
  long d = zdeg(v);
  const Int& lead = v[static_cast<std::size_t>(d)];
  std::vector<Rat> out(shift, Rat(0));
  for (long i = 0; i <= d; ++i) {
    Rat c(v[static_cast<std::size_t>(i)], lead);
    c.canonicalize();
    out.push_back(c);
  }
  return RatPoly::from_coeffs(std::move(out));
}

}  // namespace

RatPoly to_ratpoly(const QPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& z : p.coeffs()) c.emplace_back(z);
  return RatPoly::from_coeffs(std::move(c));
}

QPoly to_qpoly(const RatPoly& p) {
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const auto& r : p.coeffs()) {
    if (!is_integer(r))
      throw std::domain_error("polynomial has non-integer coefficient " + to_string(r));
    c.push_back(r.get_num());
  }
  return QPoly::from_coeffs(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> rem(a.coeffs());
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat& lb = b.leading();
  for (long i = a.degree(); i >= b.degree(); --i) {
    Rat f = rem[static_cast<std::size_t>(i)] / lb;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(i - b.degree())] = f;
    for (long j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(i - b.degree() + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {RatPoly::from_coeffs(std::move(quo)), RatPoly::from_coeffs(std::move(rem))};
}

QPoly divexact(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(to_ratpoly(a), to_ratpoly(b));
  if (!r.is_zero())
    throw std::domain_error("inexact polynomial division: nonzero remainder " + r.to_string());
  return to_qpoly(q);
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) return RatPoly();
  if (a.is_zero()) return monic_from_zvec(primitive_scale(b), 0);
  if (b.is_zero()) return monic_from_zvec(primitive_scale(a), 0);

  ZVec A = primitive_scale(a), B = primitive_scale(b);
  // Split off the common power of q so the remainder sequence runs on
  // polynomials with nonzero constant term.
  std::size_t va = low_valuation(A), vb = low_valuation(B);
  std::size_t shift = std::min(va, vb);
  A.erase(A.begin(), A.begin() + static_cast<long>(va));
  B.erase(B.begin(), B.begin() + static_cast<long>(vb));

  if (zdeg(A) < zdeg(B)) std::swap(A, B);
  Int g = 1, h = 1;
  while (true) {
    long db = zdeg(B);
    if (db == 0) {
      // Constant nonzero remainder: coprime apart from the q-power.
      ZVec one{Int(1)};
      return monic_from_zvec(one, shift);
    }
    long d = zdeg(A) - db;
    ZVec R = zprem(A, B);
    if (zdeg(R) < 0) {
      Int cont = zcontent(B);
      if (cont > 1) zdiv_scalar(B, cont);
      return monic_from_zvec(B, shift);
    }
    A = std::move(B);
    B = std::move(R);
    Int divisor = g;
    for (long i = 0; i < d; ++i) divisor *= h;
    zdiv_scalar(B, divisor);
    g = A[static_cast<std::size_t>(zdeg(A))];
    if (d > 0) {
      Int num = int_pow(g, static_cast<unsigned long>(d));
      Int den = int_pow(h, static_cast<unsigned long>(d - 1));
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (r != 0) throw std::logic_error("subresultant invariant violated");
      h = q;
    }
  }
}

}  // namespace antinv
