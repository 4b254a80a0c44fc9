#pragma once

// Finite fields GF(p^k) with q = p^k capped at 1024, realized as
// GF(p)[t]/(modulus) with full add/mul/inv lookup tables.  Elements are
// strongly-typed indices into the canonical (counting) order: element v has
// coefficients given by the little-endian base-p digits of v, so 0 is zero,
// 1 is one, and for k = 1 the index is the residue itself.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace antinv {

struct FE {
  std::uint16_t idx = 0;
  friend bool operator==(const FE&, const FE&) = default;
  friend bool operator<(const FE& a, const FE& b) { return a.idx < b.idx; }
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  // Builds GF(p^k).  If no modulus is given, the first monic irreducible of
  // degree k in counting order is used (t^2+t+1, t^3+t+1, t^4+t+1, ... for
  // p = 2).  A supplied modulus must be ascending, of length k+1, monic,
  // with coefficients in [0, p); reducible moduli are rejected.
  static FieldPtr make(long p, long k,
                       const std::optional<std::vector<long>>& modulus = std::nullopt);

  long characteristic() const { return p_; }
  long degree() const { return k_; }
  long order() const { return q_; }
  const std::vector<long>& modulus() const { return modulus_; }

  FE zero() const { return FE{0}; }
  FE one() const { return FE{1}; }
  bool is_zero(FE a) const { return a.idx == 0; }

  FE element(long index) const;
  std::vector<long> coeffs(FE a) const;          // length k, base-p digits
  FE from_coeffs(const std::vector<long>& c) const;  // entries reduced mod p
  FE from_int(long v) const;                     // prime-subfield embedding

  FE add(FE a, FE b) const { return FE{add_[flat(a, b)]}; }
  FE sub(FE a, FE b) const { return add(a, neg(b)); }
  FE neg(FE a) const { return FE{neg_[a.idx]}; }
  FE mul(FE a, FE b) const { return FE{mul_[flat(a, b)]}; }
  FE inv(FE a) const;
  FE div(FE a, FE b) const { return mul(a, inv(b)); }
  FE pow(FE a, long e) const;

  std::string to_string(FE a) const;

  // Structural equality of the underlying field, whatever the pointer
  // identity of the contexts.
  friend bool same_field(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldCtx() = default;
  std::size_t flat(FE a, FE b) const {
    check(a);
    check(b);
    return static_cast<std::size_t>(a.idx) * static_cast<std::size_t>(q_) + b.idx;
  }
  void check(FE a) const;

  long p_ = 0, k_ = 0, q_ = 0;
  std::vector<long> modulus_;  // ascending, length k+1, monic
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && same_field(*a, *b));
}

// Polynomials over GF(q), ascending coefficients; helpers tolerate trailing
// zeros and report degree of the zero polynomial as -1.
using FqPoly = std::vector<FE>;

long fqp_deg(const FqPoly& a);
FqPoly fqp_trim(FqPoly a);
FqPoly fqp_add(const FieldCtx& f, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mul(const FieldCtx& f, const FqPoly& a, const FqPoly& b);
// Remainder of a by b (b nonzero).
FqPoly fqp_mod(const FieldCtx& f, FqPoly a, const FqPoly& b);

// Trial division by all lower-degree monic factors; degree-0 inputs are not
// irreducible, degree-1 always are.  Cost grows like q^(deg/2), so the search
// throws beyond ~10^7 candidate divisors.
bool fqp_is_irreducible(const FieldCtx& f, const FqPoly& a);

// First monic irreducible of the given degree in counting order on the
// non-leading coefficients; optionally requires a nonzero constant term
// (automatic for degree >= 2).
FqPoly find_irreducible(const FieldCtx& f, long degree, bool nonzero_constant);

}  // namespace antinv
