#pragma once

// Exact scalar arithmetic. Int is an arbitrary-precision integer, Rat an
// arbitrary-precision rational kept in lowest terms with positive denominator
// (both invariants are maintained by the backing GMP classes).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace antinv {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_string(const std::string& s) {
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
}

inline Rat rat_from_string(const std::string& s) {
  try {
    Rat r(s, 10);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

inline std::string to_string(const Int& z) { return z.get_str(10); }

inline std::string to_string(const Rat& r) { return r.get_str(10); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact power with non-negative exponent.
inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Binomial coefficient; zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// n*(n-1)/2, the triangular exponent used throughout the counting formulas.
inline long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace antinv
