#include "antinv/gfq.hpp"

#include <stdexcept>

namespace antinv {
namespace {

constexpr long kMaxOrder = 1024;

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- arithmetic in GF(p)[t] on plain residue vectors (ascending) ---

long pdeg(const std::vector<long>& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<long>(i);
  return -1;
}

// Remainder of a by monic b.
std::vector<long> pmod(std::vector<long> a, const std::vector<long>& b, long p) {
  long db = pdeg(b);
  for (long i = pdeg(a); i >= db; --i) {
    long f = a[static_cast<std::size_t>(i)] % p;
    if (f != 0)
      for (long j = 0; j <= db; ++j) {
        long& c = a[static_cast<std::size_t>(i - db + j)];
        c = ((c - f * b[static_cast<std::size_t>(j)]) % p + p) % p;
      }
    i = std::min(i, pdeg(a) + 1);
  }
  a.resize(static_cast<std::size_t>(std::max<long>(pdeg(a) + 1, 0)));
  return a;
}

bool irreducible_modp(const std::vector<long>& f, long p) {
  long d = pdeg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  // Trial-divide by every monic polynomial of degree 1..d/2.
  for (long e = 1; 2 * e <= d; ++e) {
    long count = 1;
    for (long i = 0; i < e; ++i) count *= p;
    for (long v = 0; v < count; ++v) {
      std::vector<long> g(static_cast<std::size_t>(e) + 1, 0);
      long t = v;
      for (long i = 0; i < e; ++i) {
        g[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      g[static_cast<std::size_t>(e)] = 1;
      if (pdeg(pmod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr FieldCtx::make(long p, long k,
                        const std::optional<std::vector<long>>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field degree must be >= 1");
  long q = 1;
  for (long i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 1024");
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->k_ = k;
  ctx->q_ = q;

  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != static_cast<std::size_t>(k) + 1)
      throw std::invalid_argument("modulus must have degree k (k+1 coefficients)");
    for (long c : m)
      if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
    if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!irreducible_modp(m, p)) throw std::invalid_argument("reducible modulus");
    ctx->modulus_ = m;
  } else {
    // First monic irreducible of degree k in counting order.
    long bound = q;  // p^k choices of non-leading coefficients
    for (long v = 0; v < bound; ++v) {
      std::vector<long> m(static_cast<std::size_t>(k) + 1, 0);
      long t = v;
      for (long i = 0; i < k; ++i) {
        m[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      m[static_cast<std::size_t>(k)] = 1;
      if (irreducible_modp(m, p)) {
        ctx->modulus_ = m;
        break;
      }
    }
    if (ctx->modulus_.empty()) throw std::logic_error("no irreducible modulus found");
  }

  // Element index <-> coefficient digits, then dense operation tables.
  const std::size_t qq = static_cast<std::size_t>(q);
  std::vector<std::vector<long>> digits(qq, std::vector<long>(static_cast<std::size_t>(k)));
  for (long v = 0; v < q; ++v) {
    long t = v;
    for (long i = 0; i < k; ++i) {
      digits[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
  }
  auto index_of = [&](const std::vector<long>& c) {
    long v = 0, scale = 1;
    for (long i = 0; i < k; ++i) {
      v += ((c[static_cast<std::size_t>(i)] % p + p) % p) * scale;
      scale *= p;
    }
    return static_cast<std::uint16_t>(v);
  };

  ctx->add_.resize(qq * qq);
  ctx->mul_.resize(qq * qq);
  ctx->neg_.resize(qq);
  ctx->inv_.assign(qq, 0);
  for (long a = 0; a < q; ++a) {
    std::vector<long> na(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i)
      na[static_cast<std::size_t>(i)] =
          (p - digits[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]) % p;
    ctx->neg_[static_cast<std::size_t>(a)] = index_of(na);
    for (long b = 0; b < q; ++b) {
      std::vector<long> s(static_cast<std::size_t>(k));
      for (long i = 0; i < k; ++i)
        s[static_cast<std::size_t>(i)] =
            (digits[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] +
             digits[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]) %
            p;
      ctx->add_[static_cast<std::size_t>(a) * qq + static_cast<std::size_t>(b)] = index_of(s);

      std::vector<long> prod(static_cast<std::size_t>(2 * k - 1), 0);
      for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
          prod[static_cast<std::size_t>(i + j)] +=
              digits[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
              digits[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
      for (auto& c : prod) c %= p;
      std::vector<long> r = pmod(std::move(prod), ctx->modulus_, p);
      r.resize(static_cast<std::size_t>(k), 0);
      ctx->mul_[static_cast<std::size_t>(a) * qq + static_cast<std::size_t>(b)] = index_of(r);
    }
  }
  for (long a = 1; a < q; ++a) {
    for (long b = 1; b < q; ++b)
      if (ctx->mul_[static_cast<std::size_t>(a) * qq + static_cast<std::size_t>(b)] == 1) {
        ctx->inv_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
        break;
      }
    if (ctx->inv_[static_cast<std::size_t>(a)] == 0)
      throw std::logic_error("element without inverse; modulus not irreducible?");
  }
  return ctx;
}

void FieldCtx::check(FE a) const {
  if (a.idx >= q_) throw std::invalid_argument("field element index out of range");
}

FE FieldCtx::element(long index) const {
  if (index < 0 || index >= q_) throw std::invalid_argument("field element index out of range");
  return FE{static_cast<std::uint16_t>(index)};
}

std::vector<long> FieldCtx::coeffs(FE a) const {
  check(a);
  std::vector<long> c(static_cast<std::size_t>(k_));
  long t = a.idx;
  for (long i = 0; i < k_; ++i) {
    c[static_cast<std::size_t>(i)] = t % p_;
    t /= p_;
  }
  return c;
}

FE FieldCtx::from_coeffs(const std::vector<long>& c) const {
  if (c.size() > static_cast<std::size_t>(k_))
    throw std::invalid_argument("too many coefficients for field element");
  long v = 0, scale = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k_); ++i) {
    long d = i < c.size() ? ((c[i] % p_) + p_) % p_ : 0;
    v += d * scale;
    scale *= p_;
  }
  return FE{static_cast<std::uint16_t>(v)};
}

FE FieldCtx::from_int(long v) const {
  long r = ((v % p_) + p_) % p_;
  return FE{static_cast<std::uint16_t>(r)};
}

FE FieldCtx::inv(FE a) const {
  check(a);
  if (a.idx == 0) throw std::domain_error("inverse of zero field element");
  return FE{inv_[a.idx]};
}

FE FieldCtx::pow(FE a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  FE r = one(), base = a;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
  }
  return r;
}

std::string FieldCtx::to_string(FE a) const {
  check(a);
  if (k_ == 1) return std::to_string(a.idx);
  auto c = coeffs(a);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {  // ascending, like poly printing
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0)
      out += std::to_string(c[i]);
    else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// --- polynomials over GF(q) ---

long fqp_deg(const FqPoly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i].idx != 0) return static_cast<long>(i);
  return -1;
}

FqPoly fqp_trim(FqPoly a) {
  a.resize(static_cast<std::size_t>(fqp_deg(a) + 1));
  return a;
}

FqPoly fqp_add(const FieldCtx& f, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    FE x = i < a.size() ? a[i] : f.zero();
    FE y = i < b.size() ? b[i] : f.zero();
    r[i] = f.add(x, y);
  }
  return fqp_trim(std::move(r));
}

FqPoly fqp_mul(const FieldCtx& f, const FqPoly& a, const FqPoly& b) {
  long da = fqp_deg(a), db = fqp_deg(b);
  if (da < 0 || db < 0) return {};
  FqPoly r(static_cast<std::size_t>(da + db) + 1, f.zero());
  for (long i = 0; i <= da; ++i) {
    if (f.is_zero(a[static_cast<std::size_t>(i)])) continue;
    for (long j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i + j)] =
          f.add(r[static_cast<std::size_t>(i + j)],
                f.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
  }
  return r;
}

FqPoly fqp_mod(const FieldCtx& f, FqPoly a, const FqPoly& b) {
  long db = fqp_deg(b);
  if (db < 0) throw std::domain_error("polynomial modulus is zero");
  FE lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  for (long i = fqp_deg(a); i >= db; i = std::min(i - 1, fqp_deg(a))) {
    FE c = f.mul(a[static_cast<std::size_t>(i)], lead_inv);
    if (!f.is_zero(c))
      for (long j = 0; j <= db; ++j)
        a[static_cast<std::size_t>(i - db + j)] =
            f.sub(a[static_cast<std::size_t>(i - db + j)],
                  f.mul(c, b[static_cast<std::size_t>(j)]));
  }
  return fqp_trim(std::move(a));
}

bool fqp_is_irreducible(const FieldCtx& f, const FqPoly& a) {
  long d = fqp_deg(a);
  if (d <= 0) return false;
  if (d == 1) return true;
  double budget = 0;
  for (long e = 1; 2 * e <= d; ++e) {
    double c = 1;
    for (long i = 0; i < e; ++i) c *= static_cast<double>(f.order());
    budget += c;
  }
  if (budget > 1e7) throw std::runtime_error("irreducibility trial division too large");
  for (long e = 1; 2 * e <= d; ++e) {
    long count = 1;
    for (long i = 0; i < e; ++i) count *= f.order();
    for (long v = 0; v < count; ++v) {
      FqPoly g(static_cast<std::size_t>(e) + 1, f.zero());
      long t = v;
      for (long i = 0; i < e; ++i) {
        g[static_cast<std::size_t>(i)] = f.element(t % f.order());
        t /= f.order();
      }
      g[static_cast<std::size_t>(e)] = f.one();
      if (fqp_deg(fqp_mod(f, a, g)) < 0) return false;
    }
  }
  return true;
}

FqPoly find_irreducible(const FieldCtx& f, long degree, bool nonzero_constant) {
  if (degree < 1) throw std::invalid_argument("irreducible degree must be >= 1");
  double total = 1;
  for (long i = 0; i < degree; ++i) total *= static_cast<double>(f.order());
  if (total > 1e7) throw std::runtime_error("irreducible search space too large");
  long count = 1;
  for (long i = 0; i < degree; ++i) count *= f.order();
  for (long v = 0; v < count; ++v) {
    FqPoly g(static_cast<std::size_t>(degree) + 1, f.zero());
    long t = v;
    for (long i = 0; i < degree; ++i) {
      g[static_cast<std::size_t>(i)] = f.element(t % f.order());
      t /= f.order();
    }
    g[static_cast<std::size_t>(degree)] = f.one();
    if (nonzero_constant && f.is_zero(g[0])) continue;
    if (fqp_is_irreducible(f, g)) return g;
  }
  throw std::runtime_error("no irreducible polynomial found");
}

}  // namespace antinv
