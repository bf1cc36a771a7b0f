#ifndef HFLKIT_COMPLEX_JSON_HPP
#define HFLKIT_COMPLEX_JSON_HPP

#include <json.hpp>

#include "hflkit/graded_complex.hpp"
#include "hflkit/half_int.hpp"
#include "hflkit/laurent.hpp"

namespace hflkit {

// JSON encodings shared by the CLI and the schema in docs/schema.json.
//
// HalfInt        {"value": "3/2", "twice": 3}
// GradedComplex  {"generators": [{"label", "spinc", "maslov"}...],
//                 "differential": [{"from": g, "to": h, "coefficient": "c"}...]}
// HomologyTable  [{"spinc", "maslov", "free_rank", "torsion": ["2", ...]}...]
//
// Triplets are emitted in column-major order; big integers travel as decimal
// strings.

nlohmann::json to_json(HalfInt h);
nlohmann::json to_json(const GradedComplex& complex);
nlohmann::json to_json(const HomologyTable& table);
nlohmann::json to_json(const LaurentPoly& p);

/// Accepts the object form, a string such as "-1/2", or a JSON integer.
HalfInt half_int_from_json(const nlohmann::json& j);

/// Throws std::invalid_argument on schema errors. The complex is not validated.
GradedComplex complex_from_json(const nlohmann::json& j);

}  // namespace hflkit

#endif  // HFLKIT_COMPLEX_JSON_HPP
