#pragma once

// Dense univariate polynomials over an exact scalar ring, stored as ascending
// coefficient vectors with no trailing zeros (the zero polynomial is the empty
// vector and has degree -1).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "antinv/numeric.hpp"

namespace antinv {

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(T c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit Poly(long c) : Poly(T(c)) {}

  static Poly variable() { return monomial(T(1), 1); }

  static Poly monomial(T c, std::size_t e) {
    Poly p;
    if (c != 0) {
      p.coeffs_.assign(e + 1, T(0));
      p.coeffs_[e] = std::move(c);
    }
    return p;
  }

  static Poly from_coeffs(std::vector<T> c) {
    Poly p;
    p.coeffs_ = std::move(c);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  T coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : T(0);
  }
  const T& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  const std::vector<T>& coeffs() const { return coeffs_; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Poly& a, const T& s) { return a * Poly(s); }
  friend Poly operator*(const T& s, const Poly& a) { return a * Poly(s); }

  Poly pow(unsigned long e) const {
    Poly r{T(1)};
    Poly base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  // Horner evaluation at a point of any ring U that T converts into.
  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + U(coeffs_[i]);
    return acc;
  }

  std::string to_string(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      std::string cs = antinv::to_string(coeffs_[i]);
      bool neg = cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (!out.empty())
        out += neg ? "-" : "+";
      else if (neg)
        out += "-";
      std::string term;
      if (i == 0) {
        term = mag;
      } else {
        std::string head;
        if (mag != "1") head = mag.find('/') == std::string::npos ? mag : "(" + mag + ")";
        term = head + var + (i == 1 ? "" : "^" + std::to_string(i));
      }
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using QPoly = Poly<Int>;    // integer coefficients
using RatPoly = Poly<Rat>;  // rational coefficients

RatPoly to_ratpoly(const QPoly& p);
// Fails with std::domain_error unless every coefficient is an integer.
QPoly to_qpoly(const RatPoly& p);

// Euclidean division over the fraction field; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Integer-polynomial quotient; throws std::domain_error when the division
// leaves a remainder or a fractional coefficient.
QPoly divexact(const QPoly& a, const QPoly& b);

// Monic gcd computed via an integer subresultant remainder sequence, which
// keeps intermediate coefficients polynomially bounded.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

}  // namespace antinv
