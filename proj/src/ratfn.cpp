#include "antinv/ratfn.hpp"

#include <utility>

namespace antinv {

RatFn::RatFn(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = RatPoly();
    den_ = RatPoly(Rat(1));
    return;
  }
  RatPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Rat lead = den.leading();
  if (lead != 1) {
    Rat inv = 1 / lead;
    std::vector<Rat> nc = num.coeffs(), dc = den.coeffs();
    for (auto& x : nc) x *= inv;
    for (auto& x : dc) x *= inv;
    num = RatPoly::from_coeffs(std::move(nc));
    den = RatPoly::from_coeffs(std::move(dc));
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFn RatFn::q_power(long e) {
  if (e >= 0)
    return RatFn(RatPoly::monomial(Rat(1), static_cast<std::size_t>(e)));
  return RatFn(RatPoly(Rat(1)), RatPoly::monomial(Rat(1), static_cast<std::size_t>(-e)));
}

QPoly RatFn::to_qpoly() const {
  if (!is_polynomial())
    throw std::domain_error("rational function is not a polynomial: " + to_string());
  return antinv::to_qpoly(num_);
}

RatPoly RatFn::to_ratpoly() const {
  if (!is_polynomial())
    throw std::domain_error("rational function is not a polynomial: " + to_string());
  return num_;
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Use the gcd of the denominators to keep the unreduced sum small.
  RatPoly g = poly_gcd(a.den_, b.den_);
  RatPoly da = g.degree() > 0 ? divmod(a.den_, g).first : a.den_;
  RatPoly db = g.degree() > 0 ? divmod(b.den_, g).first : b.den_;
  RatPoly num = a.num_ * db + b.num_ * da;
  RatPoly den = a.den_ * db;
  return RatFn(std::move(num), std::move(den));
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn();
  // Cross-reduce before multiplying so the constructor's gcd stays small.
  RatPoly g1 = poly_gcd(a.num_, b.den_);
  RatPoly g2 = poly_gcd(b.num_, a.den_);
  RatPoly n1 = g1.degree() > 0 ? divmod(a.num_, g1).first : a.num_;
  RatPoly d2 = g1.degree() > 0 ? divmod(b.den_, g1).first : b.den_;
  RatPoly n2 = g2.degree() > 0 ? divmod(b.num_, g2).first : b.num_;
  RatPoly d1 = g2.degree() > 0 ? divmod(a.den_, g2).first : a.den_;
  return RatFn(n1 * n2, d1 * d2);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  RatFn inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  // Re-normalize the flipped fraction (denominator must come out monic).
  return a * RatFn(inv.num_, inv.den_);
}

Rat RatFn::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("pole at " + antinv::to_string(x));
  return num_.eval(x) / d;
}

std::string RatFn::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

long ratfn_complexity(const RatFn& f) {
  return f.num().degree() + f.den().degree();
}

std::vector<RatFn> fraction_solve(std::vector<std::vector<RatFn>> m,
                                  std::vector<RatFn> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw std::invalid_argument("system size mismatch");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("system matrix not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    for (std::size_t r = col; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      if (best == n || ratfn_complexity(m[r][col]) < ratfn_complexity(m[best][col]))
        best = r;
    }
    if (best == n) throw std::domain_error("singular system");
    std::swap(m[col], m[best]);
    std::swap(rhs[col], rhs[best]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      RatFn f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<RatFn> x(n);
  for (std::size_t i = n; i-- > 0;) {
    RatFn acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * x[c];
    x[i] = acc / m[i][i];
  }
  return x;
}

}  // namespace antinv
