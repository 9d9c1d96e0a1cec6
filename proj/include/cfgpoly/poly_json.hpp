#pragma once

// Canonical JSON form of a polynomial:
//   {"terms":[{"coeff":"<decimal>","mono":{"x1":1,"y3":2}}, ...]}
// Terms appear in CanonicalOrder and variables inside "mono" in Variable
// order, so equal polynomials serialize to identical bytes.

#include <string>
#include <string_view>

#include <json.hpp>

#include "cfgpoly/polynomial.hpp"

namespace cfgpoly {

nlohmann::ordered_json to_json(const Polynomial& p);

/// Accepts terms and variables in any order; repeated monomials are summed.
/// Throws std::invalid_argument on schema violations.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Compact canonical text, no trailing newline.
std::string serialize(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

}  // namespace cfgpoly
