#pragma once

// JSON forms used by the command-line tool and the bundled corpus:
//   polynomial        {"var":"q","coeffs":["c0","c1",...]}
//   rational function {"num":<polynomial>,"den":<polynomial>}
//   field             {"p":2,"k":2,"modulus":[1,1,1]}   (modulus ascending)
//   matrix            {"field":<field>,"entries":[[e,...],...]}
// where a matrix entry is an integer for prime fields and an ascending
// coefficient array for extension fields.  Coefficient strings are decimal;
// plain JSON numbers are accepted on input.

#include <json.hpp>
#include <string>

#include "antinv/gflinalg.hpp"
#include "antinv/ratfn.hpp"

namespace antinv {

nlohmann::json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json ratfn_to_json(const RatFn& f);
RatFn ratfn_from_json(const nlohmann::json& j);

nlohmann::json field_to_json(const FieldCtx& f);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const MatGF& m);
MatGF matrix_from_json(const nlohmann::json& j);

// Reads and parses a matrix file; nlohmann's parse_error (with byte offset)
// propagates on malformed JSON, std::invalid_argument on semantic errors.
MatGF matrix_from_file(const std::string& path);
void matrix_to_file(const MatGF& m, const std::string& path);

}  // namespace antinv
