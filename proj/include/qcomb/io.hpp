#pragma once

#include <string>

#include "json.hpp"
#include "qcomb/bases.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

// Canonical JSON form of a polynomial: the least exponent plus the dense
// ascending coefficient list as decimal strings. The zero polynomial is
// {"minexp": 0, "coeffs": []}.
nlohmann::json poly_to_json(const QPoly& p);
QPoly poly_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const TransitionMatrix& m);
TransitionMatrix matrix_from_json(const nlohmann::json& j);

std::string matrix_to_csv(const TransitionMatrix& m);
std::string matrix_to_pretty(const TransitionMatrix& m);

}  // namespace qcomb
