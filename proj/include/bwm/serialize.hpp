#pragma once

#include <string>

#include <json.hpp>

#include "bwm/element.hpp"
#include "bwm/modular.hpp"
#include "bwm/scalar.hpp"

namespace bwm {

using Json = nlohmann::ordered_json;

/// [[coefficient-string, q-exponent, r-exponent], ...] in (q, r) lexicographic order.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"num": ..., "den": ...}. The denominator is expanded and normalised:
/// smallest q and r exponents 0, integer content shared with the numerator
/// removed, lexicographically largest term positive.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// A residue v is written as the constant fraction v/1.
Json scalar_to_json(const ModScalar& s);

/// {"rank": n, "terms": [{"word": [...], "coeff": {...}}, ...]}, terms in
/// shortlex order of words (length first, then g1 < e1 < g2 < e2 < ...).
template <typename V>
Json element_to_json(const Element<V>& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json t;
    t["word"] = w.token_strings();
    t["coeff"] = scalar_to_json(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["rank"] = x.rank();
  out["terms"] = std::move(terms);
  return out;
}

Element<Scalar> element_from_json(const Json& j);

/// Element as an expression in parser syntax, e.g. "(q^2 - 1)/(q)*g1*e2 + (1)".
std::string element_to_expr(const Element<Scalar>& x);

}  // namespace bwm
