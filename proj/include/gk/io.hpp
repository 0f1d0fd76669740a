#pragma once

#include <json.hpp>

#include "gk/egk.hpp"
#include "gk/reducer.hpp"

namespace gk {

using json = nlohmann::json;

// Accepts "num/den" strings or JSON integers.
Rational parse_rational(const json& j);
json rational_json(const Rational& x);

Matrix parse_matrix(const json& j);
json matrix_json(const Matrix& m);

// {"p": int, "matrix": [[...]]}
HalfIntegralForm parse_form(const json& j);
json form_json(const HalfIntegralForm& b);

// {"U": matrix, "R": matrix, "ua": [..], "sigma": [1-indexed images]}
json certificate_json(const ReductionCertificate& c);
ReductionCertificate parse_certificate(const json& j, const PrimeContext& ctx);

json egk_json(const EGKDatum& g);
EGKDatum parse_egk(const json& j);

json sigma_json(const Involution& s);
Involution parse_sigma(const json& j);

json ord_json(Ord o);

}  // namespace gk
