#include "antinv/chords.hpp"

#include <map>

#include "antinv/qseries.hpp"

namespace antinv {

Involution::Involution(std::vector<std::size_t> partner) : partner_(std::move(partner)) {
  const std::size_t n = partner_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = partner_[i];
    if (p == kUnpaired) continue;
    if (p >= n || p == i || partner_[p] != i)
      throw std::invalid_argument("partner array is not an involution");
  }
}

std::size_t Involution::fixed_points() const {
  std::size_t k = 0;
  for (std::size_t p : partner_)
    if (p == kUnpaired) ++k;
  return k;
}

long crossings(const std::vector<std::size_t>& partner) {
  const std::size_t n = partner.size();
  // One arc per chord, fixed points attached to a shared point at position n.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = partner[i];
    if (p == kUnpaired)
      arcs.emplace_back(i, n);
    else if (i < p)
      arcs.emplace_back(i, p);
  }
  long count = 0;
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      auto [l1, r1] = arcs[a];
      auto [l2, r2] = arcs[b];
      if (l2 < l1) {
        std::swap(l1, l2);
        std::swap(r1, r2);
      }
      // Strict interleaving; two infinity-arcs share r = n and never cross.
      if (l1 < l2 && l2 < r1 && r1 < r2) ++count;
    }
  return count;
}

long crossings(const Involution& inv) { return crossings(inv.partners()); }

namespace {

struct InvolutionWalker {
  std::size_t n;
  long fixed_left;
  long unassigned;
  std::vector<std::size_t> partner;  // n used as the "unassigned" sentinel
  const std::function<void(const std::vector<std::size_t>&)>* fn;

  bool feasible() const {
    return fixed_left >= 0 && fixed_left <= unassigned &&
           ((unassigned - fixed_left) % 2 == 0);
  }

  void walk(std::size_t from) {
    std::size_t i = from;
    while (i < n && partner[i] != n) ++i;
    if (i == n) {
      (*fn)(partner);
      return;
    }
    // Pairing choices in ascending order, then the fixed-point choice, keep
    // the emission order lexicographic (kUnpaired compares last).
    for (std::size_t j = i + 1; j < n; ++j) {
      if (partner[j] != n) continue;
      partner[i] = j;
      partner[j] = i;
      unassigned -= 2;
      if (feasible()) walk(i + 1);
      unassigned += 2;
      partner[i] = n;
      partner[j] = n;
    }
    if (fixed_left > 0) {
      partner[i] = kUnpaired;
      --fixed_left;
      --unassigned;
      if (feasible()) walk(i + 1);
      ++unassigned;
      ++fixed_left;
      partner[i] = n;
    }
  }
};

}  // namespace

void for_each_involution(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n || (n - k) % 2 != 0) return;
  InvolutionWalker w{n, static_cast<long>(k), static_cast<long>(n),
                     std::vector<std::size_t>(n, n), &fn};
  if (w.feasible()) w.walk(0);
}

std::vector<Involution> enumerate_involutions(std::size_t n, std::size_t k) {
  std::vector<Involution> out;
  for_each_involution(n, k, [&](const std::vector<std::size_t>& p) { out.emplace_back(p); });
  return out;
}

namespace {

QPoly ank_recurrence(long n, long k, std::map<std::pair<long, long>, QPoly>& memo) {
  if (k < 0 || k > n || (n - k) % 2 != 0) return QPoly();
  if (n == 0) return QPoly(Int(1));
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  QPoly r = ank_recurrence(n - 1, k - 1, memo) +
            qint(k + 1) * ank_recurrence(n - 1, k + 1, memo);
  memo.emplace(key, r);
  return r;
}

}  // namespace

QPoly crossing_polynomial(long n, long k, AnkMethod method) {
  if (n < 0 || k < 0) throw std::invalid_argument("crossing_polynomial: negative argument");
  if (k > n || (n - k) % 2 != 0) return QPoly();
  if (method == AnkMethod::kRecurrence) {
    std::map<std::pair<long, long>, QPoly> memo;
    return ank_recurrence(n, k, memo);
  }
  std::vector<Int> counts;
  for_each_involution(static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                      [&](const std::vector<std::size_t>& p) {
                        long c = crossings(p);
                        if (counts.size() <= static_cast<std::size_t>(c))
                          counts.resize(static_cast<std::size_t>(c) + 1, Int(0));
                        counts[static_cast<std::size_t>(c)] += 1;
                      });
  return QPoly::from_coeffs(std::move(counts));
}

QPoly touchard(long m, AnkMethod method) {
  if (m < 0) throw std::invalid_argument("touchard: negative index");
  return crossing_polynomial(2 * m, 0, method);
}

QPoly touchard_riordan_sum(long m) {
  if (m < 0) throw std::invalid_argument("touchard_riordan_sum: negative index");
  QPoly out;
  for (long j = 0; j <= m; ++j) {
    Int c = binomial(2 * m, j) - binomial(2 * m, j - 1);
    QPoly term = QPoly::monomial(c, static_cast<std::size_t>(choose2(m - j + 1)));
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

QPoly touchard_formula_sum(long n, long l) {
  if (n < 0 || l < 0 || 2 * l > n)
    throw std::invalid_argument("touchard_formula_sum: need 0 <= 2l <= n");
  QPoly out;
  for (long j = 0; j <= l; ++j) {
    Int c = binomial(n, j) - binomial(n, j - 1);
    QPoly term = QPoly(c) * qbinom(n - l - j, n - 2 * l) *
                 QPoly::monomial(Int(1), static_cast<std::size_t>(choose2(l - j + 1)));
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

CatalanMatrix catalan_matrix(const std::function<QPoly(long)>& b,
                             const std::function<QPoly(long)>& lambda, long rows) {
  if (rows < 0) throw std::invalid_argument("catalan_matrix: negative size");
  const std::size_t m = static_cast<std::size_t>(rows) + 1;
  CatalanMatrix cm;
  cm.entries.assign(m, std::vector<QPoly>(m));
  cm.entries[0][0] = QPoly(Int(1));
  auto at = [&](std::size_t r, long c) -> QPoly {
    if (c < 0 || static_cast<std::size_t>(c) >= m) return QPoly();
    return cm.entries[r][static_cast<std::size_t>(c)];
  };
  for (std::size_t r = 1; r < m; ++r)
    for (long c = 0; c < static_cast<long>(m); ++c)
      cm.entries[r][static_cast<std::size_t>(c)] =
          at(r - 1, c - 1) + b(c) * at(r - 1, c) + lambda(c + 1) * at(r - 1, c + 1);
  return cm;
}

Int telephone_number(long n) {
  if (n < 0) throw std::invalid_argument("telephone_number: negative index");
  Int prev2 = 1, prev1 = 1;  // I(0), I(1)
  if (n == 0) return prev2;
  for (long i = 2; i <= n; ++i) {
    Int cur = prev1 + Int(i - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

}  // namespace antinv
