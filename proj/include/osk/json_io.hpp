#pragma once

#include <json.hpp>

#include "osk/orbits.hpp"
#include "osk/qpoly.hpp"
#include "osk/weights.hpp"

namespace osk {

// {"n": k, "delta": [ints], "eps": [ints]}; integral weights only,
// half-integral internal values are never serialized.
nlohmann::json weight_to_json(const WeightVector& w);
WeightVector weight_from_json(const nlohmann::json& j);

// {"coeffs": [c0, c1, ...]}; coefficients that fit in 64 bits are JSON
// numbers, anything larger is an exact decimal string.
nlohmann::json poly_to_json(const QPolynomial& p);
QPolynomial poly_from_json(const nlohmann::json& j);

// {"offset": o, "coeffs": [...]}.
nlohmann::json laurent_to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const nlohmann::json& j);

nlohmann::json hasse_to_json(const HasseDiagram& h);

}  // namespace osk
