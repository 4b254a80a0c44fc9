#pragma once

// Rational functions in q with exact coefficients, always kept canonical:
// gcd(num, den) = 1 and den monic; zero is 0/1.  Equality is therefore
// coefficient-wise equality of the two parts.

#include <string>
#include <vector>

#include "antinv/poly.hpp"

namespace antinv {

class RatFn {
 public:
  RatFn() : num_(), den_(Rat(1)) {}
  explicit RatFn(long c) : num_(Rat(c)), den_(Rat(1)) {}
  explicit RatFn(const Int& c) : num_(Rat(c)), den_(Rat(1)) {}
  explicit RatFn(const QPoly& p) : num_(antinv::to_ratpoly(p)), den_(Rat(1)) {}
  explicit RatFn(RatPoly p) : num_(std::move(p)), den_(Rat(1)) {}
  RatFn(RatPoly num, RatPoly den);
  RatFn(const QPoly& num, const QPoly& den)
      : RatFn(antinv::to_ratpoly(num), antinv::to_ratpoly(den)) {}

  // q^e for any integer e.
  static RatFn q_power(long e);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Fails unless the function is a polynomial with integer coefficients.
  QPoly to_qpoly() const;
  RatPoly to_ratpoly() const;

  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  // Evaluation at a rational point; throws std::domain_error on a pole.
  Rat eval(const Rat& x) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  RatPoly num_, den_;
};

// Size proxy used for pivot selection: deg(num) + deg(den).
long ratfn_complexity(const RatFn& f);

// Solves M x = rhs over the field of rational functions by Gaussian
// elimination, picking the lowest-complexity nonzero pivot in each column.
// Throws std::domain_error if the matrix is singular.
std::vector<RatFn> fraction_solve(std::vector<std::vector<RatFn>> m,
                                  std::vector<RatFn> rhs);

}  // namespace antinv
