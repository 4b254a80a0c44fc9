#include "antinv/json_io.hpp"

#include <fstream>

namespace antinv {

using nlohmann::json;

namespace {

Int int_from_node(const json& node, const char* what) {
  if (node.is_string()) return int_from_string(node.get<std::string>());
  if (node.is_number_integer()) return Int(node.get<long>());
  throw std::invalid_argument(std::string(what) + " must be a decimal string or integer");
}

Rat rat_from_node(const json& node, const char* what) {
  if (node.is_string()) return rat_from_string(node.get<std::string>());
  if (node.is_number_integer()) return Rat(node.get<long>());
  throw std::invalid_argument(std::string(what) + " must be a decimal string or integer");
}

json ratpoly_to_json(const RatPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return json{{"var", "q"}, {"coeffs", coeffs}};
}

RatPoly ratpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw std::invalid_argument("polynomial object must contain \"coeffs\"");
  if (j.contains("var") && j.at("var") != "q")
    throw std::invalid_argument("polynomial variable must be \"q\"");
  if (!j.at("coeffs").is_array())
    throw std::invalid_argument("polynomial \"coeffs\" must be an array");
  std::vector<Rat> c;
  for (const auto& node : j.at("coeffs")) c.push_back(rat_from_node(node, "coefficient"));
  return RatPoly::from_coeffs(std::move(c));
}

}  // namespace

json qpoly_to_json(const QPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return json{{"var", "q"}, {"coeffs", coeffs}};
}

QPoly qpoly_from_json(const json& j) {
  return to_qpoly(ratpoly_from_json(j));
}

json ratfn_to_json(const RatFn& f) {
  return json{{"num", ratpoly_to_json(f.num())}, {"den", ratpoly_to_json(f.den())}};
}

RatFn ratfn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational function object must contain \"num\" and \"den\"");
  return RatFn(ratpoly_from_json(j.at("num")), ratpoly_from_json(j.at("den")));
}

json field_to_json(const FieldCtx& f) {
  json out{{"p", f.characteristic()}, {"k", f.degree()}};
  if (f.degree() > 1) out["modulus"] = f.modulus();
  return out;
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p"))
    throw std::invalid_argument("field object must contain \"p\"");
  if (!j.at("p").is_number_integer())
    throw std::invalid_argument("field characteristic must be an integer");
  long p = j.at("p").get<long>();
  long k = 1;
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer())
      throw std::invalid_argument("field degree must be an integer");
    k = j.at("k").get<long>();
  }
  std::optional<std::vector<long>> modulus;
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_array())
      throw std::invalid_argument("field modulus must be an array");
    modulus = j.at("modulus").get<std::vector<long>>();
  }
  return FieldCtx::make(p, k, modulus);
}

json matrix_to_json(const MatGF& m) {
  const FieldCtx& f = *m.field();
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (f.degree() == 1)
        row.push_back(static_cast<long>(m.at(r, c).idx));
      else
        row.push_back(f.coeffs(m.at(r, c)));
    }
    entries.push_back(std::move(row));
  }
  return json{{"field", field_to_json(f)}, {"entries", entries}};
}

MatGF matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("entries"))
    throw std::invalid_argument("matrix object must contain \"field\" and \"entries\"");
  FieldPtr field = field_from_json(j.at("field"));
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.empty())
    throw std::invalid_argument("matrix \"entries\" must be a non-empty array of rows");
  std::size_t rows = entries.size();
  if (!entries[0].is_array()) throw std::invalid_argument("matrix rows must be arrays");
  std::size_t cols = entries[0].size();
  MatGF m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = entries[r];
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (e.is_number_integer())
        m.at(r, c) = field->from_int(e.get<long>());
      else if (e.is_array())
        m.at(r, c) = field->from_coeffs(e.get<std::vector<long>>());
      else
        throw std::invalid_argument("matrix entry must be an integer or coefficient array");
    }
  }
  return m;
}

MatGF matrix_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  json j = json::parse(in);  // parse_error carries the byte position
  return matrix_from_json(j);
}

void matrix_to_file(const MatGF& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write matrix file: " + path);
  out << matrix_to_json(m).dump(2) << "\n";
}

}  // namespace antinv
