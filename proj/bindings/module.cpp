#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "antinv/chords.hpp"
#include "antinv/counting.hpp"
#include "antinv/qseries.hpp"
#include "antinv/universal.hpp"

namespace py = pybind11;
using namespace antinv;

namespace {

py::object to_pyint(const Int& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Int int_from_py(const py::object& obj) {
  return Int(py::cast<std::string>(py::str(obj)), 10);
}

py::list counts_to_list(const std::vector<Int>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_pyint(x));
  return out;
}

struct PyField {
  FieldPtr ctx;
};

struct PyMatrix {
  MatGF m;
};

AnkMethod ank_method(const std::string& name) {
  if (name == "enumeration") return AnkMethod::kEnumeration;
  if (name == "recurrence") return AnkMethod::kRecurrence;
  throw std::invalid_argument("method must be 'enumeration' or 'recurrence'");
}

// partner arrays cross the boundary with -1 marking fixed points.
std::vector<std::size_t> partner_from_py(const std::vector<long>& p) {
  std::vector<std::size_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = p[i] < 0 ? kUnpaired : static_cast<std::size_t>(p[i]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact counts of anti-invariant, invariant, and profile-constrained "
            "subspaces of linear operators over finite fields";

  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::class_<QPoly>(m, "Poly")
      .def(py::init([](const std::vector<py::object>& coeffs) {
             std::vector<Int> c;
             for (const auto& x : coeffs) c.push_back(int_from_py(x));
             return QPoly::from_coeffs(std::move(c));
           }),
           py::arg("coeffs"))
      .def_property_readonly("degree", &QPoly::degree)
      .def("coeffs",
           [](const QPoly& p) {
             py::list out;
             for (long i = 0; i <= p.degree(); ++i) out.append(to_pyint(p.coeff(i)));
             return out;
           })
      .def("__call__",
           [](const QPoly& p, const py::object& q) { return to_pyint(p.eval(int_from_py(q))); })
      .def("__str__", [](const QPoly& p) { return p.to_string(); })
      .def("__repr__", [](const QPoly& p) { return "Poly(" + p.to_string() + ")"; })
      .def("__eq__", [](const QPoly& a, const QPoly& b) { return a == b; })
      .def("__add__", [](const QPoly& a, const QPoly& b) { return a + b; })
      .def("__sub__", [](const QPoly& a, const QPoly& b) { return a - b; })
      .def("__mul__", [](const QPoly& a, const QPoly& b) { return a * b; });

  py::class_<PyField>(m, "Field")
      .def(py::init([](long p, long k, std::optional<std::vector<long>> modulus) {
             return PyField{FieldCtx::make(p, k, modulus)};
           }),
           py::arg("p"), py::arg("k") = 1, py::arg("modulus") = std::nullopt)
      .def_property_readonly("order", [](const PyField& f) { return f.ctx->order(); })
      .def_property_readonly("characteristic",
                             [](const PyField& f) { return f.ctx->characteristic(); })
      .def_property_readonly("degree", [](const PyField& f) { return f.ctx->degree(); })
      .def_property_readonly("modulus", [](const PyField& f) { return f.ctx->modulus(); })
      .def("__repr__", [](const PyField& f) {
        return "Field(p=" + std::to_string(f.ctx->characteristic()) +
               ", k=" + std::to_string(f.ctx->degree()) + ")";
      });

  py::class_<PyMatrix>(m, "Matrix")
      .def(py::init([](const PyField& f, const std::vector<std::vector<long>>& entries) {
             std::size_t rows = entries.size();
             std::size_t cols = rows ? entries[0].size() : 0;
             MatGF m(f.ctx, rows, cols);
             for (std::size_t r = 0; r < rows; ++r) {
               if (entries[r].size() != cols)
                 throw std::invalid_argument("rows must have equal length");
               for (std::size_t c = 0; c < cols; ++c)
                 m.at(r, c) = f.ctx->element(entries[r][c]);
             }
             return PyMatrix{std::move(m)};
           }),
           py::arg("field"), py::arg("entries"),
           "entries are canonical element indices (residues for prime fields)")
      .def_property_readonly("n", [](const PyMatrix& m) { return m.m.rows(); })
      .def_property_readonly("field", [](const PyMatrix& m) { return PyField{m.m.field()}; })
      .def_property_readonly("entries",
                             [](const PyMatrix& m) {
                               std::vector<std::vector<long>> out(m.m.rows());
                               for (std::size_t r = 0; r < m.m.rows(); ++r)
                                 for (std::size_t c = 0; c < m.m.cols(); ++c)
                                   out[r].push_back(m.m.at(r, c).idx);
                               return out;
                             })
      .def("transpose", [](const PyMatrix& m) { return PyMatrix{m.m.transpose()}; })
      .def("__eq__", [](const PyMatrix& a, const PyMatrix& b) { return a.m == b.m; });

  // q-series and chord-diagram combinatorics.
  m.def("qint", &qint, py::arg("k"));
  m.def("qbinom", &qbinom, py::arg("n"), py::arg("k"));
  m.def("qpoch", &qpoch, py::arg("s"), py::arg("n"));
  m.def("telephone_number",
        [](long n) { return to_pyint(telephone_number(n)); }, py::arg("n"));
  m.def("crossings",
        [](const std::vector<long>& partner) { return crossings(partner_from_py(partner)); },
        py::arg("partner"), "partner array, -1 for fixed points");
  m.def("involutions",
        [](long n, long k) {
          std::vector<std::vector<long>> out;
          for_each_involution(static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                              [&](const std::vector<std::size_t>& p) {
                                std::vector<long> row;
                                for (std::size_t x : p)
                                  row.push_back(x == kUnpaired ? -1 : static_cast<long>(x));
                                out.push_back(std::move(row));
                              });
          return out;
        },
        py::arg("n"), py::arg("k"));
  m.def("crossing_polynomial",
        [](long n, long k, const std::string& method) {
          return crossing_polynomial(n, k, ank_method(method));
        },
        py::arg("n"), py::arg("k"), py::arg("method") = "recurrence");
  m.def("touchard",
        [](long mm, const std::string& method) { return touchard(mm, ank_method(method)); },
        py::arg("m"), py::arg("method") = "recurrence");
  m.def("touchard_riordan_sum", &touchard_riordan_sum, py::arg("m"));
  m.def("touchard_formula_sum", &touchard_formula_sum, py::arg("n"), py::arg("l"));

  // Counts attached to an operator.
  m.def("subspace_count",
        [](long q, long n, long k) { return to_pyint(subspace_count(q, n, k)); },
        py::arg("q"), py::arg("n"), py::arg("k"));
  m.def("invariant_count",
        [](const PyMatrix& t, long j, long guard) {
          return to_pyint(invariant_count(t.m, j, Int(guard)));
        },
        py::arg("matrix"), py::arg("j"), py::arg("guard") = kDefaultGuard);
  m.def("invariant_counts",
        [](const PyMatrix& t, long guard) {
          return counts_to_list(invariant_counts(t.m, Int(guard)));
        },
        py::arg("matrix"), py::arg("guard") = kDefaultGuard);
  m.def("alpha",
        [](const PyMatrix& t, long l, const std::string& method, long guard) {
          if (method == "brute") return to_pyint(anti_invariant_count(t.m, l, Int(guard)));
          if (method == "formula")
            return to_pyint(anti_invariant_via_formula(t.m, l, Int(guard)));
          throw std::invalid_argument("method must be 'brute' or 'formula'");
        },
        py::arg("matrix"), py::arg("l"), py::arg("method") = "brute",
        py::arg("guard") = kDefaultGuard);
  m.def("sigma",
        [](const PyMatrix& t, const std::vector<long>& profile, long guard) {
          return to_pyint(profile_count(t.m, profile, Int(guard)));
        },
        py::arg("matrix"), py::arg("profile"), py::arg("guard") = kDefaultGuard);
  m.def("pair_class",
        [](const PyMatrix& t, long a, long b, long guard) {
          return to_pyint(pair_class_count(t.m, a, b, Int(guard)));
        },
        py::arg("matrix"), py::arg("a"), py::arg("b"), py::arg("guard") = kDefaultGuard);

  // Canonical operator constructions.
  m.def("nilpotent",
        [](const PyField& f, long n) {
          return PyMatrix{regular_nilpotent(f.ctx, static_cast<std::size_t>(n))};
        },
        py::arg("field"), py::arg("n"));
  m.def("companion",
        [](const PyField& f, const std::vector<long>& coeffs) {
          FqPoly p;
          for (long c : coeffs) p.push_back(f.ctx->element(c));
          return PyMatrix{companion_matrix(f.ctx, p)};
        },
        py::arg("field"), py::arg("coeffs"),
        "ascending coefficients as canonical element indices");
  m.def("companion_irreducible",
        [](const PyField& f, long degree) {
          return PyMatrix{companion_of_first_irreducible(f.ctx, degree)};
        },
        py::arg("field"), py::arg("degree"));
  m.def("diag_distinct",
        [](const PyField& f, long n) {
          return PyMatrix{diag_distinct(f.ctx, static_cast<std::size_t>(n))};
        },
        py::arg("field"), py::arg("n"));
  m.def("block_operator",
        [](const PyField& f, long n, long l, long i) {
          return PyMatrix{witness_operator(f.ctx, n, l, i)};
        },
        py::arg("field"), py::arg("n"), py::arg("l"), py::arg("i"));
  m.def("random_matrix",
        [](const PyField& f, long n, std::uint64_t seed) {
          std::mt19937_64 rng(seed);
          return PyMatrix{random_matrix(f.ctx, static_cast<std::size_t>(n), rng)};
        },
        py::arg("field"), py::arg("n"), py::arg("seed"));

  // Closed forms.
  m.def("alpha_nilpotent", &anti_invariant_nilpotent, py::arg("n"), py::arg("l"));
  m.def("alpha_irreducible", &anti_invariant_irreducible, py::arg("n"), py::arg("l"));
  m.def("alpha_diag_distinct", &anti_invariant_diag_distinct, py::arg("n"), py::arg("l"));
  m.def("sigma_irreducible", &profile_count_irreducible, py::arg("profile"));
  m.def("sigma_nilpotent", &profile_count_nilpotent, py::arg("profile"));
  m.def("splitting_count", &splitting_subspace_count, py::arg("m"), py::arg("d"));

  // Universal formulas and their supporting identities.
  m.def("universal",
        [](long n, long l, const std::string& method) {
          UniversalFormula u = method == "recurrence" ? universal_by_recurrence(n, l)
                               : method == "system"   ? universal_by_system(n, l)
                               : method == "closed"
                                   ? universal_closed_form(n, l)
                                   : throw std::invalid_argument(
                                         "method must be 'recurrence', 'system', or 'closed'");
          return u.p;
        },
        py::arg("n"), py::arg("l"), py::arg("method") = "closed");
  m.def("zero_sum_value", &zero_sum_value, py::arg("n"), py::arg("l"), py::arg("i"));
  m.def("det_degree",
        [](long n, long l) {
          auto r = det_degree_check(n, l);
          py::dict out;
          out["det"] = r.det;
          out["expected_degree"] = r.expected_degree;
          out["pass"] = r.pass;
          return out;
        },
        py::arg("n"), py::arg("l"));
}
