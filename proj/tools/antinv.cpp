// antinv: compute / construct / derive / verify / table for subspace counts
// attached to linear operators over finite fields.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "antinv/chords.hpp"
#include "antinv/counting.hpp"
#include "antinv/json_io.hpp"
#include "antinv/qseries.hpp"
#include "antinv/universal.hpp"

using namespace antinv;
using nlohmann::json;

namespace {

struct Global {
  std::uint64_t seed = 12345;
  long guard = kDefaultGuard;
  std::string format;  // empty = per-command default
};

std::string pick_format(const Global& g, const char* fallback) {
  return g.format.empty() ? fallback : g.format;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// "p=2,k=2,mod=1:1:1" (k and mod optional; mod is ascending, colon-separated).
FieldPtr parse_field_spec(const std::string& spec) {
  long p = 0, k = 1;
  std::optional<std::vector<long>> modulus;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("field spec item '" + item + "' is not key=value");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "p") {
      p = std::stol(value);
    } else if (key == "k") {
      k = std::stol(value);
    } else if (key == "mod") {
      std::vector<long> m;
      std::size_t mp = 0;
      while (mp <= value.size()) {
        std::size_t me = value.find(':', mp);
        if (me == std::string::npos) me = value.size();
        m.push_back(std::stol(value.substr(mp, me - mp)));
        mp = me + 1;
      }
      modulus = std::move(m);
    } else {
      throw std::invalid_argument("unknown field spec key '" + key + "'");
    }
    pos = end + 1;
  }
  if (p == 0) throw std::invalid_argument("field spec needs p=<prime>");
  return FieldCtx::make(p, k, modulus);
}

// Field of order q (q a prime power).
FieldPtr field_for_q(long q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  long p = 2;
  while (q % p != 0) ++p;
  long k = 0, rest = q;
  while (rest > 1) {
    if (rest % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    rest /= p;
    ++k;
  }
  return FieldCtx::make(p, k);
}

MatGF load_square_matrix(const std::string& path) {
  MatGF m = matrix_from_file(path);
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix in " + path + " is not square");
  return m;
}

// Characteristic polynomial det(tI - A), by minor expansion memoized on the
// active column set (n <= 8 in scope, so 2^n states).
FqPoly char_poly(const MatGF& a) {
  const FieldCtx& f = *a.field();
  const std::size_t n = a.rows();
  std::vector<std::vector<FqPoly>> b(n, std::vector<FqPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FqPoly e{f.neg(a.at(i, j))};
      if (i == j) e.push_back(f.one());
      b[i][j] = std::move(e);
    }
  std::map<unsigned, FqPoly> memo;
  std::function<FqPoly(unsigned)> det = [&](unsigned cols) -> FqPoly {
    if (cols == 0) return FqPoly{f.one()};
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(cols));
    FqPoly total;
    long parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      FqPoly term = fqp_mul(f, b[row][j], det(cols & ~(1u << j)));
      if (parity & 1)
        for (auto& c : term) c = f.neg(c);
      total = fqp_add(f, total, term);
      ++parity;
    }
    memo.emplace(cols, total);
    return total;
  };
  return det((1u << n) - 1u);
}

bool is_regular_nilpotent(const MatGF& t) {
  const std::size_t n = t.rows();
  MatGF power = t;
  for (std::size_t i = 1; i < n; ++i) power = power * t;
  if (power != MatGF(t.field(), n, n)) return false;
  MatGF copy = t;
  return rref(copy).size() == n - 1;
}

long distinct_roots(const FieldCtx& f, const FqPoly& p) {
  long roots = 0;
  for (long v = 0; v < f.order(); ++v) {
    FE x = f.element(v), acc = f.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    if (f.is_zero(acc)) ++roots;
  }
  return roots;
}

// Closed form for the anti-invariant count when the operator is of one of the
// recognized shapes; nullopt otherwise.
std::optional<QPoly> alpha_closed_form(const MatGF& t, long l) {
  const long n = static_cast<long>(t.rows());
  if (2 * l > n || l < 0) return std::nullopt;
  if (is_regular_nilpotent(t)) return anti_invariant_nilpotent(n, l);
  FqPoly cp = char_poly(t);
  if (fqp_is_irreducible(*t.field(), cp)) return anti_invariant_irreducible(n, l);
  if (distinct_roots(*t.field(), cp) == n) return anti_invariant_diag_distinct(n, l);
  return std::nullopt;
}

std::optional<QPoly> sigma_closed_form(const MatGF& t, const std::vector<long>& profile) {
  if (fqp_is_irreducible(*t.field(), char_poly(t)))
    return profile_count_irreducible(profile);
  if (is_regular_nilpotent(t)) return profile_count_nilpotent(profile);
  return std::nullopt;
}

void emit_value(const Global& g, const Int& value, const std::string& method,
                const std::optional<QPoly>& closed) {
  std::string format = pick_format(g, "json");
  if (format == "json") {
    json out{{"value", value.get_str()}, {"method", method}};
    if (closed) out["polynomial"] = qpoly_to_json(*closed);
    emit_json(out);
  } else {
    std::cout << "value = " << value.get_str() << "\n";
    std::cout << "method = " << method << "\n";
    if (closed) std::cout << "closed form = " << closed->to_string() << "\n";
  }
}

// Shared accounting for the verify subcommands.
struct Report {
  long total = 0, passed = 0;
  json failures = json::array();

  void check(bool ok, const std::function<json()>& witness) {
    ++total;
    if (ok)
      ++passed;
    else
      failures.push_back(witness());
  }
  int emit(const Global& g, const std::string& what) {
    std::string format = pick_format(g, "pretty");
    bool ok = passed == total;
    if (format == "json") {
      emit_json(json{{"verify", what},
                     {"total", total},
                     {"passed", passed},
                     {"failures", failures}});
    } else {
      std::cout << passed << "/" << total << " identities hold\n";
      if (!ok) emit_json(json{{"verify", what}, {"failures", failures}});
    }
    return ok ? 0 : 1;
  }
};

int verify_main(const Global& g, long n, const std::vector<long>& qs, long count) {
  Report rep;
  for (long qv : qs) {
    auto f = field_for_q(qv);
    auto check_one = [&](const MatGF& t, const std::string& tag) {
      auto xj = invariant_counts(t, Int(g.guard));
      for (long l = 0; 2 * l <= n; ++l) {
        Int brute = anti_invariant_count(t, l, Int(g.guard));
        Int formula = anti_invariant_from_counts(n, l, xj, Int(qv));
        rep.check(brute == formula, [&] {
          return json{{"case", tag},        {"q", qv},
                      {"l", l},             {"matrix", matrix_to_json(t)},
                      {"brute", brute.get_str()}, {"formula", formula.get_str()}};
        });
      }
    };
    if (count <= 0) {
      Int space = int_pow(Int(qv), n * n);
      if (space > Int(100000))
        throw std::invalid_argument("exhaustive sweep over " + space.get_str() +
                                    " matrices is too large; pass --count");
      long cells = n * n;
      std::vector<long> digits(cells, 0);
      MatGF t(f, n, n);
      bool done = false;
      long index = 0;
      while (!done) {
        for (long c = 0; c < cells; ++c) t.at(c / n, c % n) = f->element(digits[c]);
        check_one(t, "exhaustive #" + std::to_string(index++));
        long c = 0;
        for (; c < cells; ++c) {
          if (++digits[c] < qv) break;
          digits[c] = 0;
        }
        done = c == cells;
      }
    } else {
      std::mt19937_64 rng(g.seed);
      for (long i = 0; i < count; ++i)
        check_one(random_matrix(f, n, rng), "random #" + std::to_string(i));
    }
  }
  return rep.emit(g, "main");
}

int verify_touchard(const Global& g, long max_m, AnkMethod method) {
  Report rep;
  QPoly qm1 = QPoly::variable() - QPoly(Int(1));
  for (long m = 1; m <= max_m; ++m) {
    QPoly lhs = qm1.pow(m) * touchard(m, method);
    QPoly rhs = touchard_riordan_sum(m);
    rep.check(lhs == rhs, [&] {
      return json{{"m", m}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
    });
  }
  return rep.emit(g, method == AnkMethod::kEnumeration ? "touchard-riordan" : "touchard");
}

int verify_ank(const Global& g, long max_n) {
  Report rep;
  for (long n = 0; n <= max_n; ++n) {
    Int total = 0;
    for (long k = 0; k <= n; ++k) {
      QPoly enumd = crossing_polynomial(n, k, AnkMethod::kEnumeration);
      QPoly rec = crossing_polynomial(n, k, AnkMethod::kRecurrence);
      rep.check(enumd == rec, [&] {
        return json{{"n", n}, {"k", k}, {"enumeration", enumd.to_string()},
                    {"recurrence", rec.to_string()}};
      });
      total += enumd.eval(Int(1));
    }
    rep.check(total == telephone_number(n), [&] {
      return json{{"n", n}, {"sum_at_q_1", total.get_str()},
                  {"telephone", telephone_number(n).get_str()}};
    });
  }
  return rep.emit(g, "ank");
}

int verify_zero_sum(const Global& g, long max_n) {
  Report rep;
  for (long n = 2; n <= max_n; ++n)
    for (long l = 1; 2 * l <= n; ++l)
      for (long i = 1; i <= l; ++i) {
        QPoly v = zero_sum_value(n, l, i);
        rep.check(v.is_zero(), [&] {
          return json{{"n", n}, {"l", l}, {"i", i}, {"value", v.to_string()}};
        });
      }
  return rep.emit(g, "zero-sum");
}

int verify_s_sums(const Global& g, long max_n) {
  Report rep;
  for (long n = 2; n <= max_n; ++n)
    for (long l = 1; 2 * l <= n; ++l)
      for (long i = 1; i <= l; ++i) {
        RatFn s[5];
        bool forms = true, heine = true;
        for (int w = 1; w <= 4; ++w) {
          s[w] = zero_sum_component(n, l, i, w, SumMethod::kBinomial);
          forms = forms &&
                  s[w] == zero_sum_component(n, l, i, w, SumMethod::kHypergeometric);
        }
        heine = zero_sum_component_heine(n, l, i, 1) == s[1] &&
                zero_sum_component_heine(n, l, i, 2) == s[2];
        bool pairs = s[1] == s[4] && s[2] == s[3] &&
                     (s[1] + s[2] - s[3] - s[4]).is_zero();
        rep.check(forms && pairs && heine, [&] {
          return json{{"n", n},
                      {"l", l},
                      {"i", i},
                      {"series_forms_agree", forms},
                      {"pair_equalities_hold", pairs},
                      {"transformed_forms_agree", heine}};
        });
      }
  return rep.emit(g, "s-sums");
}

int verify_det_degree(const Global& g, long max_n) {
  Report rep;
  for (long n = 2; n <= max_n; ++n)
    for (long l = 1; 2 * l <= n; ++l) {
      auto r = det_degree_check(n, l);
      rep.check(r.pass, [&] {
        return json{{"n", n}, {"l", l}, {"det", r.det.to_string()},
                    {"expected_degree", r.expected_degree}};
      });
    }
  return rep.emit(g, "det-degree");
}

int verify_recurrence(const Global& g, long max_n) {
  Report rep;
  for (long n = 0; n <= max_n; ++n)
    for (long l = 0; 2 * l <= n; ++l) {
      auto rec = universal_by_recurrence(n, l);
      auto sys = universal_by_system(n, l);
      auto cls = universal_closed_form(n, l);
      bool ok = true;
      for (long j = 0; j <= l; ++j) ok = ok && rec.p[j] == cls.p[j] && sys.p[j] == cls.p[j];
      rep.check(ok, [&] {
        json jp = json::array();
        for (long j = 0; j <= l; ++j)
          jp.push_back(json{{"recurrence", rec.p[j].to_string()},
                            {"system", sys.p[j].to_string()},
                            {"closed", cls.p[j].to_string()}});
        return json{{"n", n}, {"l", l}, {"p", jp}};
      });
    }
  return rep.emit(g, "recurrence");
}

int verify_duality(const Global& g, long max_n, const std::vector<long>& qs, long count) {
  Report rep;
  for (long qv : qs) {
    auto f = field_for_q(qv);
    std::mt19937_64 rng(g.seed);
    for (long trial = 0; trial < count; ++trial) {
      long n = 2 + random_below(rng, std::max(1L, max_n - 1));
      MatGF t = random_matrix(f, static_cast<std::size_t>(n), rng);
      MatGF tt = t.transpose();
      for (long l = 1; 2 * l <= n; ++l) {
        Int a = anti_invariant_count(t, l, Int(g.guard));
        Int at = anti_invariant_count(tt, l, Int(g.guard));
        Int s = profile_count(t, {n - l, l}, Int(g.guard));
        rep.check(a == at && a == s, [&] {
          return json{{"q", qv},
                      {"trial", trial},
                      {"l", l},
                      {"matrix", matrix_to_json(t)},
                      {"alpha", a.get_str()},
                      {"alpha_transpose", at.get_str()},
                      {"profile_count", s.get_str()}};
        });
      }
    }
  }
  return rep.emit(g, "duality");
}

int run_table(const Global& g, long rows, bool coeff_json) {
  auto zero = [](long) { return QPoly(); };
  auto qweights = [](long k) { return qint(k); };
  auto cm = catalan_matrix(zero, qweights, rows);
  std::string format = pick_format(g, "csv");
  if (format == "json") {
    json entries = json::array();
    for (long r = 0; r <= rows; ++r)
      for (long c = 0; c <= r; ++c)
        entries.push_back(json{{"row", r},
                               {"col", c},
                               {"coeffs", qpoly_to_json(cm.entries[r][c])["coeffs"]},
                               {"string", cm.entries[r][c].to_string()}});
    emit_json(json{{"rows", rows}, {"entries", entries}});
    return 0;
  }
  for (long r = 0; r <= rows; ++r)
    for (long c = 0; c <= r; ++c) {
      const QPoly& p = cm.entries[r][c];
      if (coeff_json) {
        std::string dumped = qpoly_to_json(p)["coeffs"].dump();
        std::string escaped;  // CSV quoting: double any embedded quote
        for (char ch : dumped) {
          if (ch == '"') escaped.push_back('"');
          escaped.push_back(ch);
        }
        std::cout << r << "," << c << ",\"" << escaped << "\"\n";
      } else {
        std::cout << r << "," << c << "," << p.to_string() << "\n";
      }
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  int rc = 0;

  CLI::App app{"subspace counts of linear operators over finite fields"};
  app.require_subcommand(1);
  app.add_option("--seed", g.seed, "seed for randomized verification")->capture_default_str();
  app.add_option("--guard", g.guard, "abort enumerations larger than this many subspaces")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "pretty", "csv"}));

  // ---- compute ----
  auto* compute = app.add_subcommand("compute", "counts for a matrix read from file");
  compute->require_subcommand(1);
  compute->fallthrough();

  std::string matrix_path, method = "brute";
  long arg_l = 0, arg_a = 0, arg_b = 0;
  std::vector<long> profile;

  auto* alpha = compute->add_subcommand("alpha", "anti-invariant subspace count");
  alpha->fallthrough();
  alpha->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  alpha->add_option("--l", arg_l, "subspace dimension")->required();
  alpha->add_option("--method", method, "brute|formula")
      ->check(CLI::IsMember({"brute", "formula"}));
  alpha->callback([&] {
    MatGF t = load_square_matrix(matrix_path);
    Int value = method == "brute" ? anti_invariant_count(t, arg_l, Int(g.guard))
                                  : anti_invariant_via_formula(t, arg_l, Int(g.guard));
    emit_value(g, value, method, alpha_closed_form(t, arg_l));
  });

  auto* xj = compute->add_subcommand("xj", "invariant subspace counts X_0..X_n");
  xj->fallthrough();
  xj->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  xj->callback([&] {
    MatGF t = load_square_matrix(matrix_path);
    auto counts = invariant_counts(t, Int(g.guard));
    if (pick_format(g, "json") == "json") {
      json values = json::array();
      for (const auto& v : counts) values.push_back(v.get_str());
      emit_json(json{{"values", values}, {"method", "brute"}});
    } else {
      for (std::size_t j = 0; j < counts.size(); ++j)
        std::cout << "X_" << j << " = " << counts[j].get_str() << "\n";
    }
  });

  auto* sigma = compute->add_subcommand("sigma", "profile-constrained subspace count");
  sigma->fallthrough();
  sigma->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  sigma->add_option("--profile", profile, "weakly decreasing parts summing to n")
      ->required()
      ->delimiter(',');
  sigma->add_option("--method", method, "brute|formula")
      ->check(CLI::IsMember({"brute", "formula"}));
  sigma->callback([&] {
    MatGF t = load_square_matrix(matrix_path);
    auto closed = sigma_closed_form(t, profile);
    Int value;
    if (method == "brute") {
      value = profile_count(t, profile, Int(g.guard));
    } else {
      if (!closed)
        throw std::invalid_argument(
            "no closed form applies to this operator; use --method brute");
      value = closed->eval(Int(t.field()->order()));
    }
    emit_value(g, value, method, closed);
  });

  auto* pairclass = compute->add_subcommand("pairclass",
                                            "subspaces with dim W = a, dim(W n T^-1 W) = b");
  pairclass->fallthrough();
  pairclass->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  pairclass->add_option("--a", arg_a, "dimension of W")->required();
  pairclass->add_option("--b", arg_b, "dimension of the intersection")->required();
  pairclass->callback([&] {
    MatGF t = load_square_matrix(matrix_path);
    emit_value(g, pair_class_count(t, arg_a, arg_b, Int(g.guard)), "brute", std::nullopt);
  });

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "write a canonical operator matrix");
  construct->fallthrough();
  std::string kind, field_spec = "p=2,k=1", out_path;
  std::vector<long> poly_coeffs;
  long arg_n = 0, arg_i = 0;
  construct->add_option("--kind", kind, "nilpotent_jordan|companion|diag_distinct|block_Ti")
      ->required()
      ->check(CLI::IsMember({"nilpotent_jordan", "companion", "diag_distinct", "block_Ti"}));
  construct->add_option("--field", field_spec, "p=<prime>[,k=<deg>][,mod=c0:c1:...]")
      ->capture_default_str();
  construct->add_option("--poly", poly_coeffs,
                        "ascending coefficients as element indices (companion)")
      ->delimiter(',');
  construct->add_option("--n", arg_n, "matrix size");
  construct->add_option("--l", arg_l, "parameter l (block_Ti)");
  construct->add_option("--i", arg_i, "block index 1..l (block_Ti)");
  construct->add_option("--out", out_path, "output file (stdout if omitted)");
  construct->callback([&] {
    auto f = parse_field_spec(field_spec);
    std::optional<MatGF> m;
    if (kind == "nilpotent_jordan") {
      if (arg_n <= 0) throw std::invalid_argument("nilpotent_jordan needs --n");
      m = regular_nilpotent(f, static_cast<std::size_t>(arg_n));
    } else if (kind == "companion") {
      if (poly_coeffs.empty()) throw std::invalid_argument("companion needs --poly");
      FqPoly p;
      for (long c : poly_coeffs) p.push_back(f->element(c));
      m = companion_matrix(f, p);
    } else if (kind == "diag_distinct") {
      if (arg_n <= 0) throw std::invalid_argument("diag_distinct needs --n");
      m = diag_distinct(f, static_cast<std::size_t>(arg_n));
    } else {  // block_Ti
      if (arg_n <= 0 || arg_l <= 0 || arg_i < 1 || arg_i > arg_l)
        throw std::invalid_argument("block_Ti needs --n, --l, and --i with 1 <= i <= l");
      m = witness_operator(f, arg_n, arg_l, arg_i);
    }
    if (out_path.empty())
      emit_json(matrix_to_json(*m));
    else
      matrix_to_file(*m, out_path);
  });

  // ---- derive ----
  auto* derive = app.add_subcommand("derive", "universal coefficient vectors");
  derive->require_subcommand(1);
  derive->fallthrough();
  auto* universal = derive->add_subcommand(
      "universal", "coefficients p_0..p_l with alpha = sum p_j X_j for every operator");
  universal->fallthrough();
  std::string derive_method = "closed";
  universal->add_option("--n", arg_n, "ambient dimension")->required();
  universal->add_option("--l", arg_l, "subspace dimension")->required();
  universal->add_option("--method", derive_method, "recurrence|system|closed")
      ->check(CLI::IsMember({"recurrence", "system", "closed"}));
  universal->callback([&] {
    UniversalFormula u = derive_method == "recurrence" ? universal_by_recurrence(arg_n, arg_l)
                         : derive_method == "system"   ? universal_by_system(arg_n, arg_l)
                                                       : universal_closed_form(arg_n, arg_l);
    if (pick_format(g, "json") == "json") {
      json p = json::array();
      for (const auto& pj : u.p) p.push_back(pj.to_string());
      emit_json(json{{"n", u.n}, {"l", u.l}, {"method", derive_method}, {"p", p}});
    } else {
      std::cout << "n = " << u.n << ", l = " << u.l << ", method = " << derive_method << "\n";
      for (std::size_t j = 0; j < u.p.size(); ++j)
        std::cout << "p_" << j << " = " << u.p[j].to_string() << "\n";
    }
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check identities; exit 1 on any failure");
  verify->require_subcommand(1);
  verify->fallthrough();

  long main_n = 3, main_count = 0;
  std::vector<long> main_qs{2};
  auto* v_main = verify->add_subcommand(
      "main", "brute-force count vs invariant-count formula, per operator");
  v_main->fallthrough();
  v_main->add_option("--n", main_n, "matrix size")->capture_default_str();
  v_main->add_option("--q", main_qs, "field orders, comma separated")->delimiter(',');
  v_main->add_option("--count", main_count, "random samples per field (0 = exhaustive)")
      ->capture_default_str();
  v_main->callback([&] { rc = verify_main(g, main_n, main_qs, main_count); });

  long touchard_m = 5;
  auto* v_touchard =
      verify->add_subcommand("touchard", "alternating sum vs matching polynomials (recurrence)");
  v_touchard->fallthrough();
  v_touchard->add_option("--max-m", touchard_m, "largest m")->capture_default_str();
  v_touchard->callback([&] { rc = verify_touchard(g, touchard_m, AnkMethod::kRecurrence); });

  long tr_m = 8;
  auto* v_tr = verify->add_subcommand(
      "touchard-riordan", "alternating sum vs matching polynomials (full enumeration)");
  v_tr->fallthrough();
  v_tr->add_option("--max-m", tr_m, "largest m")->capture_default_str();
  v_tr->callback([&] { rc = verify_touchard(g, tr_m, AnkMethod::kEnumeration); });

  long ank_n = 10;
  auto* v_ank = verify->add_subcommand(
      "ank", "crossing polynomials: enumeration vs recurrence, q=1 telephone counts");
  v_ank->fallthrough();
  v_ank->add_option("--max-n", ank_n, "largest n")->capture_default_str();
  v_ank->callback([&] { rc = verify_ank(g, ank_n); });

  long zero_n = 12;
  auto* v_zero = verify->add_subcommand("zero-sum", "row-vanishing alternating sums");
  v_zero->fallthrough();
  v_zero->add_option("--max-n", zero_n, "largest n")->capture_default_str();
  v_zero->callback([&] { rc = verify_zero_sum(g, zero_n); });

  long ssum_n = 10;
  auto* v_ssums = verify->add_subcommand(
      "s-sums", "alternating sums vs their basic hypergeometric forms");
  v_ssums->fallthrough();
  v_ssums->add_option("--max-n", ssum_n, "largest n")->capture_default_str();
  v_ssums->callback([&] { rc = verify_s_sums(g, ssum_n); });

  long det_n = 8;
  auto* v_det = verify->add_subcommand("det-degree", "witness determinant degree and nonvanishing");
  v_det->fallthrough();
  v_det->add_option("--max-n", det_n, "largest n")->capture_default_str();
  v_det->callback([&] { rc = verify_det_degree(g, det_n); });

  long rec_n = 8;
  auto* v_rec = verify->add_subcommand(
      "recurrence", "universal coefficients: recurrence vs linear system vs closed form");
  v_rec->fallthrough();
  v_rec->add_option("--max-n", rec_n, "largest n")->capture_default_str();
  v_rec->callback([&] { rc = verify_recurrence(g, rec_n); });

  long dual_n = 4, dual_count = 100;
  std::vector<long> dual_qs{2, 3};
  auto* v_dual = verify->add_subcommand("duality",
                                        "alpha(T) = alpha(T^t) = profile count of (n-l, l)");
  v_dual->fallthrough();
  v_dual->add_option("--max-n", dual_n, "largest matrix size")->capture_default_str();
  v_dual->add_option("--q", dual_qs, "field orders, comma separated")->delimiter(',');
  v_dual->add_option("--count", dual_count, "random samples per field")->capture_default_str();
  v_dual->callback([&] { rc = verify_duality(g, dual_n, dual_qs, dual_count); });

  // ---- table ----
  auto* table = app.add_subcommand("table", "tabulated combinatorial arrays");
  table->require_subcommand(1);
  table->fallthrough();
  auto* hermite = table->add_subcommand(
      "hermite-catalan", "moment matrix of the recurrence with b = 0, lambda_k = [k]_q");
  hermite->fallthrough();
  long rows = 8;
  bool coeff_json = false;
  hermite->add_option("--rows", rows, "last row index")->capture_default_str();
  hermite->add_flag("--coeffs", coeff_json, "emit coefficient arrays instead of sparse strings");
  hermite->callback([&] { rc = run_table(g, rows, coeff_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
